#pragma once

#include <string>
#include <vector>

namespace offlang {

// Rows index the PREDICTED class, columns the ACTUAL class.
struct ConfusionMatrix {
  std::vector<std::string> classes;
  std::vector<std::vector<long long>> counts;

  long long at(std::size_t predicted, std::size_t actual) const {
    return counts[predicted][actual];
  }
  long long total() const;
  long long trace() const;
  // Predictions of class k = row sum; actual members of class k = column sum.
  long long row_sum(std::size_t k) const;
  long long col_sum(std::size_t k) const;
};

// Classes default to first-occurrence order over y_true then y_pred; pass an
// explicit list to fix the order (every observed label must be present).
ConfusionMatrix confusion_matrix(const std::vector<std::string>& y_true,
                                 const std::vector<std::string>& y_pred,
                                 const std::vector<std::string>& classes = {});

double accuracy(const ConfusionMatrix& cm);

struct ClassPR {
  double precision = 0.0;
  double recall = 0.0;
  // A 0/0 ratio scores 0.0 and raises the matching flag.
  bool precision_degenerate = false;
  bool recall_degenerate = false;
};

ClassPR precision_recall(const ConfusionMatrix& cm, std::size_t k);

struct F1Summary {
  std::vector<double> per_class;
  double macro = 0.0;
  // Pooled over all decisions; for single-label data this equals accuracy
  // exactly (same arithmetic, not just the same value).
  double micro = 0.0;
  double weighted = 0.0;
};

F1Summary f1_scores(const ConfusionMatrix& cm);

// Matthews correlation; the multiclass generalization of the binary formula.
// Any zero factor in the denominator yields 0.0.
double matthews_corr(const ConfusionMatrix& cm);

struct EvalReport {
  ConfusionMatrix cm;
  long long n = 0;
  double accuracy = 0.0;
  double mcc = 0.0;
  std::vector<ClassPR> per_class;
  F1Summary f1;
};

EvalReport evaluate(const std::vector<std::string>& y_true,
                    const std::vector<std::string>& y_pred,
                    const std::vector<std::string>& classes = {});

// Picks one summary number out of a report ("accuracy", "f1_macro",
// "f1_micro", "f1_weighted", "mcc").
double metric_value(const EvalReport& report, const std::string& metric);

// Deterministic tab-separated rendering, six decimals, confusion grid last.
std::string format_report(const EvalReport& report);

}  // namespace offlang
