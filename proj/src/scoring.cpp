#include "gelato/scoring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "gelato/errors.hpp"
#include "gelato/ontology.hpp"

namespace gelato {

namespace {

std::vector<std::string> maybe_repair(const std::vector<std::string>& tags,
                                      std::optional<RepairPolicy> repair) {
  if (!repair) return tags;
  return repair_tags(tags, Scheme::BIO, *repair);
}

const std::vector<std::string>& require_level1(const Document& doc) {
  if (!doc.level1_tags) throw AlignmentError(doc.id + " (missing level-1 tags)");
  return *doc.level1_tags;
}

const std::vector<std::string>& require_level2(const Document& doc) {
  if (!doc.level2_tags) throw AlignmentError(doc.id + " (missing level-2 tags)");
  return *doc.level2_tags;
}

void check_aligned(const std::vector<Document>& gold, const std::vector<Document>& pred) {
  if (gold.size() != pred.size()) {
    throw AlignmentError("document count: " + std::to_string(gold.size()) + " vs " +
                         std::to_string(pred.size()));
  }
  for (std::size_t d = 0; d < gold.size(); ++d) {
    if (gold[d].id != pred[d].id) {
      throw AlignmentError(gold[d].id + " vs " + pred[d].id);
    }
    if (gold[d].tokens.size() != pred[d].tokens.size()) {
      throw AlignmentError(gold[d].id);
    }
  }
}

struct Counts {
  std::int64_t tp = 0;
  std::int64_t gold = 0;
  std::int64_t pred = 0;
};

ScoreReport report_from_counts(const Counts& all,
                               const std::map<std::string, Counts>& per_type) {
  ScoreReport report;
  report.true_positives = all.tp;
  report.false_positives = all.pred - all.tp;
  report.false_negatives = all.gold - all.tp;
  report.precision = Percent::ratio(all.tp, all.pred);
  report.recall = Percent::ratio(all.tp, all.gold);
  report.f1 = Percent::ratio(2 * all.tp, all.gold + all.pred);
  for (const auto& [label, c] : per_type) {
    TypeScore row;
    row.gold_count = c.gold;
    row.pred_count = c.pred;
    row.true_positives = c.tp;
    row.precision = Percent::ratio(c.tp, c.pred);
    row.recall = Percent::ratio(c.tp, c.gold);
    row.f1 = Percent::ratio(2 * c.tp, c.gold + c.pred);
    report.per_type.emplace(label, row);
  }
  return report;
}

// Exact span+label matching; spans within one document never overlap, so a
// (start, end) key can hold at most one gold label.
ScoreReport score_spans(const std::vector<std::vector<Span>>& gold,
                        const std::vector<std::vector<Span>>& pred) {
  Counts all;
  std::map<std::string, Counts> per_type;
  for (std::size_t d = 0; d < gold.size(); ++d) {
    std::unordered_map<std::uint64_t, const Span*> gold_by_span;
    for (const auto& g : gold[d]) {
      all.gold += 1;
      per_type[g.label].gold += 1;
      gold_by_span[(static_cast<std::uint64_t>(g.start) << 32) | g.end] = &g;
    }
    for (const auto& p : pred[d]) {
      all.pred += 1;
      per_type[p.label].pred += 1;
      auto it = gold_by_span.find((static_cast<std::uint64_t>(p.start) << 32) | p.end);
      if (it != gold_by_span.end() && it->second->label == p.label) {
        all.tp += 1;
        per_type[p.label].tp += 1;
      }
    }
  }
  return report_from_counts(all, per_type);
}

std::vector<Span> merge_adjacent_same_label(std::vector<Span> spans) {
  std::vector<Span> out;
  for (auto& span : spans) {
    if (!out.empty() && out.back().end == span.start && out.back().label == span.label) {
      out.back().end = span.end;
    } else {
      out.push_back(span);
    }
  }
  return out;
}

std::string tag_class(const std::string& tag) {
  if (tag == "O") return "O";
  return tag.substr(2);
}

}  // namespace

Percent Percent::ratio(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator <= 0) return Percent{0};
  const std::int64_t scaled = numerator * 10000;
  std::int64_t q = scaled / denominator;
  const std::int64_t r = scaled % denominator;
  const std::int64_t twice = 2 * r;
  if (twice > denominator || (twice == denominator && (q % 2) != 0)) ++q;
  return Percent{q};
}

std::string Percent::str() const {
  std::ostringstream out;
  out << hundredths / 100 << '.';
  const auto frac = hundredths % 100;
  out << static_cast<char>('0' + frac / 10) << static_cast<char>('0' + frac % 10);
  return out.str();
}

std::string ScoreReport::to_text() const {
  std::ostringstream out;
  auto row = [&out](const std::string& label, const Percent& p, const Percent& r,
                    const Percent& f, std::int64_t gold, std::int64_t pred) {
    out << label;
    for (std::size_t i = label.size(); i < 28; ++i) out << ' ';
    auto cell = [&out](const std::string& s, std::size_t width) {
      for (std::size_t i = s.size(); i < width; ++i) out << ' ';
      out << s;
    };
    cell(p.str(), 9);
    cell(r.str(), 9);
    cell(f.str(), 9);
    cell(std::to_string(gold), 8);
    cell(std::to_string(pred), 8);
    out << '\n';
  };
  out << "Type                         Precision   Recall       F1    Gold    Pred\n";
  row("ALL", precision, recall, f1, true_positives + false_negatives,
      true_positives + false_positives);
  for (const auto& [label, t] : per_type) {
    row(label, t.precision, t.recall, t.f1, t.gold_count, t.pred_count);
  }
  return out.str();
}

std::string ScoreReport::to_json() const {
  nlohmann::json doc;
  doc["precision"] = precision.str();
  doc["recall"] = recall.str();
  doc["f1"] = f1.str();
  doc["true_positives"] = true_positives;
  doc["false_positives"] = false_positives;
  doc["false_negatives"] = false_negatives;
  nlohmann::json types;
  for (const auto& [label, t] : per_type) {
    nlohmann::json row;
    row["precision"] = t.precision.str();
    row["recall"] = t.recall.str();
    row["f1"] = t.f1.str();
    row["gold_count"] = t.gold_count;
    row["pred_count"] = t.pred_count;
    row["true_positives"] = t.true_positives;
    types[label] = row;
  }
  doc["per_type"] = types;
  return doc.dump(2) + "\n";
}

ScoreReport score(const std::vector<Document>& gold, const std::vector<Document>& pred,
                  ScoreLevel level, std::optional<RepairPolicy> repair) {
  check_aligned(gold, pred);
  std::vector<std::vector<Span>> gold_spans;
  std::vector<std::vector<Span>> pred_spans;
  for (std::size_t d = 0; d < gold.size(); ++d) {
    const auto& gold_tags =
        level == ScoreLevel::One ? require_level1(gold[d]) : require_level2(gold[d]);
    const auto& pred_tags =
        level == ScoreLevel::One ? require_level1(pred[d]) : require_level2(pred[d]);
    gold_spans.push_back(decode_tags(maybe_repair(gold_tags, repair), Scheme::BIO));
    pred_spans.push_back(decode_tags(maybe_repair(pred_tags, repair), Scheme::BIO));
  }
  return score_spans(gold_spans, pred_spans);
}

ScoreReport iaa(const std::vector<Document>& a, const std::vector<Document>& b,
                IaaMode mode, RepairPolicy repair) {
  check_aligned(a, b);
  std::vector<std::vector<Span>> a_spans;
  std::vector<std::vector<Span>> b_spans;
  for (std::size_t d = 0; d < a.size(); ++d) {
    auto left = decode_tags(repair_tags(require_level1(a[d]), Scheme::BIO, repair), Scheme::BIO);
    auto right = decode_tags(repair_tags(require_level1(b[d]), Scheme::BIO, repair), Scheme::BIO);
    if (mode == IaaMode::IO) {
      left = merge_adjacent_same_label(std::move(left));
      right = merge_adjacent_same_label(std::move(right));
    }
    a_spans.push_back(std::move(left));
    b_spans.push_back(std::move(right));
  }
  return score_spans(a_spans, b_spans);
}

std::string iaa_table(const std::vector<IaaRow>& rows) {
  std::ostringstream out;
  out << "Pair                    IO F1    Level 1 F1\n";
  for (const auto& row : rows) {
    out << row.pair;
    for (std::size_t i = row.pair.size(); i < 20; ++i) out << ' ';
    const auto io = row.io_f1.str();
    for (std::size_t i = io.size(); i < 9; ++i) out << ' ';
    out << io;
    const auto l1 = row.level1_f1.str();
    for (std::size_t i = l1.size(); i < 14; ++i) out << ' ';
    out << l1 << '\n';
  }
  return out.str();
}

std::int64_t ConfusionMatrix::at(const std::string& gold, const std::string& pred) const {
  const auto g = std::find(labels.begin(), labels.end(), gold);
  const auto p = std::find(labels.begin(), labels.end(), pred);
  if (g == labels.end() || p == labels.end()) throw UnknownLabelError(gold + "/" + pred);
  return cells[static_cast<std::size_t>(g - labels.begin())]
              [static_cast<std::size_t>(p - labels.begin())];
}

std::string ConfusionMatrix::to_text() const {
  std::size_t width = 6;
  for (const auto& label : labels) width = std::max(width, label.size() + 2);
  std::ostringstream out;
  out << "gold \\ pred";
  for (std::size_t i = 11; i < width; ++i) out << ' ';
  for (const auto& label : labels) {
    for (std::size_t i = label.size(); i < width; ++i) out << ' ';
    out << label;
  }
  out << '\n';
  for (std::size_t g = 0; g < labels.size(); ++g) {
    out << labels[g];
    for (std::size_t i = labels[g].size(); i < width; ++i) out << ' ';
    for (std::size_t p = 0; p < labels.size(); ++p) {
      const auto s = std::to_string(cells[g][p]);
      for (std::size_t i = s.size(); i < width; ++i) out << ' ';
      out << s;
    }
    out << '\n';
  }
  return out.str();
}

std::string ConfusionMatrix::to_csv() const {
  std::ostringstream out;
  out << "gold\\pred";
  for (const auto& label : labels) out << ',' << label;
  out << '\n';
  for (std::size_t g = 0; g < labels.size(); ++g) {
    out << labels[g];
    for (std::size_t p = 0; p < labels.size(); ++p) out << ',' << cells[g][p];
    out << '\n';
  }
  return out.str();
}

ConfusionMatrix confusion(const std::vector<Document>& gold,
                          const std::vector<Document>& pred,
                          std::optional<RepairPolicy> repair) {
  check_aligned(gold, pred);
  ConfusionMatrix matrix;
  for (auto label : all_level1()) matrix.labels.emplace_back(name(label));
  matrix.labels.emplace_back("O");
  matrix.cells.assign(matrix.labels.size(),
                      std::vector<std::int64_t>(matrix.labels.size(), 0));
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < matrix.labels.size(); ++i) index[matrix.labels[i]] = i;
  for (std::size_t d = 0; d < gold.size(); ++d) {
    const auto gold_tags = maybe_repair(require_level1(gold[d]), repair);
    const auto pred_tags = maybe_repair(require_level1(pred[d]), repair);
    for (std::size_t i = 0; i < gold_tags.size(); ++i) {
      const auto g = index.find(tag_class(gold_tags[i]));
      const auto p = index.find(tag_class(pred_tags[i]));
      if (g == index.end()) throw UnknownLabelError(gold_tags[i]);
      if (p == index.end()) throw UnknownLabelError(pred_tags[i]);
      matrix.cells[g->second][p->second] += 1;
    }
  }
  return matrix;
}

DatasetStats stats(const SplitManifest& split, std::optional<RepairPolicy> repair) {
  DatasetStats out;
  out.name = split.name;
  out.bills = static_cast<std::int64_t>(split.documents.size());
  std::set<std::pair<std::string, std::string>> unique_typed;
  std::set<std::string> unique_surfaces;
  bool first_doc = true;
  for (const auto& doc : split.documents) {
    const auto n = static_cast<std::int64_t>(doc.tokens.size());
    out.tokens += n;
    out.min_tokens = first_doc ? n : std::min(out.min_tokens, n);
    out.max_tokens = first_doc ? n : std::max(out.max_tokens, n);
    first_doc = false;
    const auto spans =
        decode_tags(maybe_repair(require_level1(doc), repair), Scheme::BIO);
    for (const auto& span : spans) {
      out.total_mentions += 1;
      out.per_level1[span.label] += 1;
      std::string surface = doc.tokens[span.start];
      for (std::size_t i = span.start + 1; i < span.end; ++i) {
        surface += ' ';
        surface += doc.tokens[i];
      }
      unique_typed.emplace(surface, span.label);
      unique_surfaces.insert(std::move(surface));
    }
    if (doc.level2_tags) {
      const auto subs = decode_tags(maybe_repair(*doc.level2_tags, repair), Scheme::BIO);
      for (const auto& span : subs) out.per_level2[span.label] += 1;
    }
  }
  out.unique_mentions = static_cast<std::int64_t>(unique_typed.size());
  out.unique_surfaces = static_cast<std::int64_t>(unique_surfaces.size());
  out.mean_tokens = out.bills == 0
                        ? 0.0
                        : static_cast<double>(out.tokens) / static_cast<double>(out.bills);
  return out;
}

std::string stats_table(const std::vector<DatasetStats>& splits) {
  std::ostringstream out;
  auto row = [&out, &splits](const std::string& label, auto getter) {
    out << label;
    for (std::size_t i = label.size(); i < 26; ++i) out << ' ';
    for (const auto& s : splits) {
      const auto text = getter(s);
      for (std::size_t i = text.size(); i < 12; ++i) out << ' ';
      out << text;
    }
    out << '\n';
  };
  row("", [](const DatasetStats& s) { return s.name; });
  row("Bills", [](const DatasetStats& s) { return std::to_string(s.bills); });
  row("Tokens", [](const DatasetStats& s) { return std::to_string(s.tokens); });
  row("Unique Mentions",
      [](const DatasetStats& s) { return std::to_string(s.unique_mentions); });
  row("Total Mentions",
      [](const DatasetStats& s) { return std::to_string(s.total_mentions); });
  row("Min Tokens/Bill",
      [](const DatasetStats& s) { return std::to_string(s.min_tokens); });
  row("Mean Tokens/Bill", [](const DatasetStats& s) {
    std::ostringstream cell;
    cell.setf(std::ios::fixed);
    cell.precision(2);
    cell << s.mean_tokens;
    return cell.str();
  });
  row("Max Tokens/Bill",
      [](const DatasetStats& s) { return std::to_string(s.max_tokens); });

  std::set<std::string> level1_labels;
  std::set<std::string> level2_labels;
  for (const auto& s : splits) {
    for (const auto& [label, _] : s.per_level1) level1_labels.insert(label);
    for (const auto& [label, _] : s.per_level2) level2_labels.insert(label);
  }
  if (!level1_labels.empty()) {
    out << "\nLevel-1 mentions\n";
    for (const auto& label : level1_labels) {
      row(label, [&label](const DatasetStats& s) {
        auto it = s.per_level1.find(label);
        return std::to_string(it == s.per_level1.end() ? 0 : it->second);
      });
    }
  }
  if (!level2_labels.empty()) {
    out << "\nLevel-2 mentions\n";
    for (const auto& label : level2_labels) {
      row(label, [&label](const DatasetStats& s) {
        auto it = s.per_level2.find(label);
        return std::to_string(it == s.per_level2.end() ? 0 : it->second);
      });
    }
  }
  return out.str();
}

std::string stats_json(const std::vector<DatasetStats>& splits) {
  nlohmann::json doc;
  for (const auto& s : splits) {
    nlohmann::json entry;
    entry["bills"] = s.bills;
    entry["tokens"] = s.tokens;
    entry["min_tokens"] = s.min_tokens;
    entry["max_tokens"] = s.max_tokens;
    entry["mean_tokens"] = s.mean_tokens;
    entry["total_mentions"] = s.total_mentions;
    entry["unique_mentions"] = s.unique_mentions;
    entry["unique_surfaces"] = s.unique_surfaces;
    entry["level1"] = s.per_level1;
    entry["level2"] = s.per_level2;
    doc[s.name] = entry;
  }
  return doc.dump(2) + "\n";
}

}  // namespace gelato
