#ifndef GELATO_SCORING_HPP
#define GELATO_SCORING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gelato/document.hpp"
#include "gelato/seqlabel.hpp"

namespace gelato {

// A percentage held in exact hundredths so that two-decimal reporting is
// deterministic. Rounding is half-to-even.
struct Percent {
  std::int64_t hundredths = 0;

  static Percent ratio(std::int64_t numerator, std::int64_t denominator);
  double value() const { return static_cast<double>(hundredths) / 100.0; }
  std::string str() const;

  bool operator==(const Percent&) const = default;
};

struct TypeScore {
  Percent precision;
  Percent recall;
  Percent f1;
  std::int64_t gold_count = 0;
  std::int64_t pred_count = 0;
  std::int64_t true_positives = 0;
};

struct ScoreReport {
  Percent precision;
  Percent recall;
  Percent f1;
  std::int64_t true_positives = 0;
  std::int64_t false_positives = 0;
  std::int64_t false_negatives = 0;
  std::map<std::string, TypeScore> per_type;

  std::string to_text() const;
  std::string to_json() const;
};

enum class ScoreLevel { One, Two };

// Entity-level exact span+label matching between aligned document lists.
// Level two scores the level-2 tag layers. When `repair` is set, tag layers
// are repaired before decoding; otherwise invalid layers throw.
ScoreReport score(const std::vector<Document>& gold, const std::vector<Document>& pred,
                  ScoreLevel level, std::optional<RepairPolicy> repair = std::nullopt);

enum class IaaMode { IO, Level1 };

// Pairwise inter-annotator agreement: a is treated as gold. F1 is symmetric
// in the pair; precision and recall swap.
ScoreReport iaa(const std::vector<Document>& a, const std::vector<Document>& b,
                IaaMode mode, RepairPolicy repair = RepairPolicy::Conll);

struct IaaRow {
  std::string pair;
  Percent io_f1;
  Percent level1_f1;
};

// Two-column agreement table: IO F1 and Level 1 F1.
std::string iaa_table(const std::vector<IaaRow>& rows);

// Token-level confusion over the six top classes plus O.
struct ConfusionMatrix {
  std::vector<std::string> labels;             // axis order, O last
  std::vector<std::vector<std::int64_t>> cells;  // cells[gold][pred]

  std::int64_t at(const std::string& gold, const std::string& pred) const;
  std::string to_text() const;
  std::string to_csv() const;
};

ConfusionMatrix confusion(const std::vector<Document>& gold,
                          const std::vector<Document>& pred,
                          std::optional<RepairPolicy> repair = std::nullopt);

struct DatasetStats {
  std::string name;
  std::int64_t bills = 0;
  std::int64_t tokens = 0;
  std::int64_t min_tokens = 0;
  std::int64_t max_tokens = 0;
  double mean_tokens = 0.0;
  std::int64_t total_mentions = 0;
  std::int64_t unique_mentions = 0;  // distinct (surface, level-1 label)
  std::int64_t unique_surfaces = 0;  // distinct surface strings only
  std::map<std::string, std::int64_t> per_level1;
  std::map<std::string, std::int64_t> per_level2;
};

DatasetStats stats(const SplitManifest& split,
                   std::optional<RepairPolicy> repair = std::nullopt);

std::string stats_table(const std::vector<DatasetStats>& splits);
std::string stats_json(const std::vector<DatasetStats>& splits);

}  // namespace gelato

#endif  // GELATO_SCORING_HPP
