#include "offlang/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "offlang/errors.hpp"

namespace offlang {

long long ConfusionMatrix::total() const {
  long long sum = 0;
  for (const auto& row : counts) {
    for (const long long c : row) sum += c;
  }
  return sum;
}

long long ConfusionMatrix::trace() const {
  long long sum = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) sum += counts[k][k];
  return sum;
}

long long ConfusionMatrix::row_sum(std::size_t k) const {
  long long sum = 0;
  for (const long long c : counts[k]) sum += c;
  return sum;
}

long long ConfusionMatrix::col_sum(std::size_t k) const {
  long long sum = 0;
  for (const auto& row : counts) sum += row[k];
  return sum;
}

ConfusionMatrix confusion_matrix(const std::vector<std::string>& y_true,
                                 const std::vector<std::string>& y_pred,
                                 const std::vector<std::string>& classes) {
  if (y_true.size() != y_pred.size()) {
    throw LengthMismatchError("y_true and y_pred differ in length: " +
                              std::to_string(y_true.size()) + " vs " +
                              std::to_string(y_pred.size()));
  }
  ConfusionMatrix cm;
  cm.classes = classes;
  auto index_of = [&](const std::string& label) -> std::size_t {
    const auto it = std::find(cm.classes.begin(), cm.classes.end(), label);
    if (it != cm.classes.end()) return static_cast<std::size_t>(it - cm.classes.begin());
    if (!classes.empty()) {
      throw UnknownLabelError("label '" + label + "' missing from the supplied class list");
    }
    cm.classes.push_back(label);
    return cm.classes.size() - 1;
  };
  // Resolve the class set first so the matrix can be sized once.
  std::vector<std::pair<std::size_t, std::size_t>> cells(y_true.size());
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const std::size_t actual = index_of(y_true[i]);
    const std::size_t predicted = index_of(y_pred[i]);
    cells[i] = {predicted, actual};
  }
  cm.counts.assign(cm.classes.size(), std::vector<long long>(cm.classes.size(), 0));
  for (const auto& [predicted, actual] : cells) ++cm.counts[predicted][actual];
  return cm;
}

double accuracy(const ConfusionMatrix& cm) {
  const long long n = cm.total();
  if (n == 0) return 0.0;
  return static_cast<double>(cm.trace()) / static_cast<double>(n);
}

ClassPR precision_recall(const ConfusionMatrix& cm, std::size_t k) {
  ClassPR out;
  const long long tp = cm.at(k, k);
  const long long predicted = cm.row_sum(k);
  const long long actual = cm.col_sum(k);
  if (predicted == 0) {
    out.precision_degenerate = true;
  } else {
    out.precision = static_cast<double>(tp) / static_cast<double>(predicted);
  }
  if (actual == 0) {
    out.recall_degenerate = true;
  } else {
    out.recall = static_cast<double>(tp) / static_cast<double>(actual);
  }
  return out;
}

F1Summary f1_scores(const ConfusionMatrix& cm) {
  F1Summary out;
  const std::size_t n_classes = cm.classes.size();
  const long long total = cm.total();
  out.per_class.resize(n_classes, 0.0);
  double weighted = 0.0;
  double macro = 0.0;
  for (std::size_t k = 0; k < n_classes; ++k) {
    const ClassPR pr = precision_recall(cm, k);
    const double denom = pr.precision + pr.recall;
    const double f1 = denom > 0.0 ? 2.0 * pr.precision * pr.recall / denom : 0.0;
    out.per_class[k] = f1;
    macro += f1;
    weighted += f1 * static_cast<double>(cm.col_sum(k));
  }
  out.macro = n_classes > 0 ? macro / static_cast<double>(n_classes) : 0.0;
  // Micro-averaged precision and recall both pool to trace/total for
  // single-label predictions, so micro-F1 is computed exactly as accuracy.
  out.micro = total > 0 ? static_cast<double>(cm.trace()) / static_cast<double>(total) : 0.0;
  out.weighted = total > 0 ? weighted / static_cast<double>(total) : 0.0;
  return out;
}

double matthews_corr(const ConfusionMatrix& cm) {
  // R_K correlation: (s*c - sum_k p_k t_k) /
  //   sqrt((s^2 - sum p_k^2)(s^2 - sum t_k^2)).
  // For two classes this reduces to the familiar
  // (TP*TN - FP*FN) / sqrt((TP+FP)(TP+FN)(TN+FP)(TN+FN)).
  const double s = static_cast<double>(cm.total());
  const double c = static_cast<double>(cm.trace());
  double dot_pt = 0.0, sum_p2 = 0.0, sum_t2 = 0.0;
  for (std::size_t k = 0; k < cm.classes.size(); ++k) {
    const double p = static_cast<double>(cm.row_sum(k));
    const double t = static_cast<double>(cm.col_sum(k));
    dot_pt += p * t;
    sum_p2 += p * p;
    sum_t2 += t * t;
  }
  const double denom_sq = (s * s - sum_p2) * (s * s - sum_t2);
  if (denom_sq <= 0.0) return 0.0;
  return (c * s - dot_pt) / std::sqrt(denom_sq);
}

EvalReport evaluate(const std::vector<std::string>& y_true,
                    const std::vector<std::string>& y_pred,
                    const std::vector<std::string>& classes) {
  EvalReport report;
  report.cm = confusion_matrix(y_true, y_pred, classes);
  report.n = report.cm.total();
  report.accuracy = accuracy(report.cm);
  report.mcc = matthews_corr(report.cm);
  for (std::size_t k = 0; k < report.cm.classes.size(); ++k) {
    report.per_class.push_back(precision_recall(report.cm, k));
  }
  report.f1 = f1_scores(report.cm);
  return report;
}

double metric_value(const EvalReport& report, const std::string& metric) {
  if (metric == "accuracy") return report.accuracy;
  if (metric == "f1_macro") return report.f1.macro;
  if (metric == "f1_micro") return report.f1.micro;
  if (metric == "f1_weighted") return report.f1.weighted;
  if (metric == "mcc") return report.mcc;
  throw ConfigError("unknown metric '" + metric + "'");
}

namespace {

std::string fixed6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string format_report(const EvalReport& report) {
  std::ostringstream out;
  out << "n\t" << report.n << '\n';
  out << "accuracy\t" << fixed6(report.accuracy) << '\n';
  out << "mcc\t" << fixed6(report.mcc) << '\n';
  out << "f1_macro\t" << fixed6(report.f1.macro) << '\n';
  out << "f1_micro\t" << fixed6(report.f1.micro) << '\n';
  out << "f1_weighted\t" << fixed6(report.f1.weighted) << '\n';
  out << "class\tprecision\trecall\tf1\tsupport\tflags\n";
  for (std::size_t k = 0; k < report.cm.classes.size(); ++k) {
    const ClassPR& pr = report.per_class[k];
    std::string flags;
    if (pr.precision_degenerate) flags += "no_predictions";
    if (pr.recall_degenerate) {
      if (!flags.empty()) flags += ",";
      flags += "no_actuals";
    }
    if (flags.empty()) flags = "-";
    out << report.cm.classes[k] << '\t' << fixed6(pr.precision) << '\t' << fixed6(pr.recall)
        << '\t' << fixed6(report.f1.per_class[k]) << '\t' << report.cm.col_sum(k) << '\t'
        << flags << '\n';
  }
  out << "confusion\tpredicted_down_actual_across\n";
  out << "pred\\actual";
  for (const auto& name : report.cm.classes) out << '\t' << name;
  out << '\n';
  for (std::size_t p = 0; p < report.cm.classes.size(); ++p) {
    out << report.cm.classes[p];
    for (std::size_t a = 0; a < report.cm.classes.size(); ++a) {
      out << '\t' << report.cm.at(p, a);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace offlang
