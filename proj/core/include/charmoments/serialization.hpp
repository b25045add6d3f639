#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charmoments/analysis.hpp"
#include "charmoments/gram.hpp"
#include "charmoments/groups.hpp"
#include "charmoments/moment_sequence.hpp"
#include "charmoments/partition_count.hpp"

namespace charmoments {

// Ordered key/value pairs describing how a result was produced; embedded
// verbatim in every serialized artifact so runs are reproducible from
// their outputs alone.
using ConfigMap = std::vector<std::pair<std::string, std::string>>;

// Moment sequences.  JSON: {"config": {...}, "model": ..., "moments":
// ["1", "0", ...]} with decimal strings.  CSV: "# key=value" header
// lines, then a "k,m_k" header row and one row per moment.
std::string to_json(const MomentSequence& m, const ConfigMap& config);
std::string to_csv(const MomentSequence& m, const ConfigMap& config);
MomentSequence moment_sequence_from_json(const std::string& text);
MomentSequence moment_sequence_from_csv(const std::string& text);

std::string to_json(const ASequence& a, const ConfigMap& config);

// Norm estimate with an optional growth certificate in one document.
std::string norm_report_to_json(const NormEstimate& e, const MinorantReport* cert,
                                const ConfigMap& config);

// Plot-ready table: one row per k with root, ratio and fitted value
// (blank where undefined).
std::string norm_plot_csv(const NormEstimate& e, const ConfigMap& config);
std::string to_json(const ConvolutionReport& r, const ASequence& a, const ConfigMap& config);
std::string to_json(const MinorantReport& r, const ConfigMap& config);
std::string to_json(const NormEstimate& e, const ConfigMap& config);
std::string to_json(const HankelReport& r, const ConfigMap& config);
std::string to_json(const PushForwardReport& r, const ConfigMap& config);
std::string to_json(const BlockInequalityReport& r, const ConfigMap& config);

// Gram matrices serialize with partition labels as arrays of blocks
// ([[1,4],[2,3]]) and entries as decimal strings in row-major order.
std::string to_json(const GramMatrix& g, const ConfigMap& config);

std::string dims_to_json(const ColorWord& w, PartitionClass cls, unsigned n,
                         const std::optional<BigInt>& count,
                         const std::optional<BigInt>& rank,
                         const BigInt& dim, const ConfigMap& config);

// Finite group input: {"order": N, "identity": i, "generators": [...],
// "table": [[...], ...]}.  The table is validated before use.
CayleyTable cayley_table_from_json(const std::string& text);

// Homomorphism input for push-forward checks: {"source": "free:2",
// "target": "abelian:2", "images": [[1], [2]]}.
struct HomSpec {
    std::string source;
    std::string target;
    std::vector<std::vector<int>> images;
};

HomSpec hom_spec_from_json(const std::string& text);

std::string read_text_file(const std::string& path);

} // namespace charmoments
