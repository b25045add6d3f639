#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charmoments/bigint.hpp"
#include "charmoments/errors.hpp"
#include "charmoments/moment_sequence.hpp"

namespace charmoments {

// Opaque canonical element representation; the meaning of the entries is
// model-specific (reduced word, exponent vector, table index, ...).
using GroupElement = std::vector<std::int32_t>;

// A finitely generated discrete group with a distinguished generating
// tuple g_1, ..., g_n.  multiply and invert return canonical forms.
class GroupModel {
public:
    virtual ~GroupModel() = default;

    virtual std::string name() const = 0;
    virtual unsigned generator_count() const = 0;

    virtual GroupElement identity() const = 0;
    virtual GroupElement generator(unsigned i) const = 0;  // 0-based
    virtual GroupElement multiply(const GroupElement& a, const GroupElement& b) const = 0;
    virtual GroupElement invert(const GroupElement& a) const = 0;

    // Normal form of an arbitrary valid representation.
    virtual GroupElement canonicalize(const GroupElement& a) const;

    // When the Cayley graph of the generating multiset
    // (g_1, g_1^-1, ..., g_n, g_n^-1) is a regular tree, its degree.
    // Enables the exact radial walk recursion.
    virtual std::optional<int> cayley_tree_degree() const { return std::nullopt; }

    // The 2n walk letters g_1, g_1^-1, ..., g_n, g_n^-1, as a multiset.
    std::vector<GroupElement> letters() const;

    // Defining relators as signed 1-based generator words (i means g_i,
    // -i means g_i^-1); together with the generators these present the
    // group.  Free groups return an empty list.
    virtual std::vector<std::vector<int>> defining_relations() const = 0;

    // Product g_{w_1}^{sgn} ... g_{w_m}^{sgn} of a signed word.
    GroupElement evaluate_word(const std::vector<int>& word) const;
};

// Finite group given by its full multiplication table.  Indices are
// 0-based; table[a][b] is the product ab.
struct CayleyTable {
    std::size_t order = 0;
    std::vector<std::vector<unsigned>> table;
    std::vector<unsigned> generators;
    unsigned identity = 0;

    // Checks shape, Latin-square property, identity behaviour,
    // associativity, and that the generators generate.  Throws
    // InvalidInput on any defect.
    void validate() const;
};

std::unique_ptr<GroupModel> make_free_group(unsigned n);
std::unique_ptr<GroupModel> make_free_abelian(unsigned n);
std::unique_ptr<GroupModel> make_cyclic(unsigned order);
std::unique_ptr<GroupModel> make_direct_product(std::unique_ptr<GroupModel> a,
                                                std::unique_ptr<GroupModel> b);
// Free product Z_{o_1} * ... * Z_{o_n}; order 0 is a Z factor and order 1
// a trivial factor (which still contributes a generator).
std::unique_ptr<GroupModel> make_free_product_cyclic(const std::vector<unsigned>& orders);
std::unique_ptr<GroupModel> make_finite_table_group(CayleyTable table, std::string tag);

// Presets: "free:N", "abelian:N", "cyclic:M", "freeprod:O1,O2,...",
// "product:<preset>+<preset>", "table:<path.json>".
std::unique_ptr<GroupModel> parse_group_preset(const std::string& preset);

struct DpLimits {
    std::size_t memory_budget_bytes = std::size_t{2} * 1024 * 1024 * 1024;
};

// m_k = number of length-k words over the 2n walk letters multiplying to
// the identity.  Uses the radial tree recursion when available, else a
// sparse element-indexed dynamic program bounded by limits (ResourceError
// with the attained k on overflow).
MomentSequence group_moment_sequence(const GroupModel& model, int max_k,
                                     const DpLimits& limits = {});

// Same walk counts but over a caller-supplied letter multiset (each
// letter must come with its inverse for the sequence to be a moment
// sequence; this is not enforced).
MomentSequence group_moment_sequence(const GroupModel& model, int max_k,
                                     const std::vector<GroupElement>& walk_letters,
                                     const DpLimits& limits,
                                     const std::string& tag);

// Comparison of walk return counts along a generator-respecting
// homomorphism: the image counts dominate the source counts.
struct PushForwardReport {
    MomentSequence source;
    MomentSequence target;
    bool monotone = false;     // source m_k <= target m_k for all k
    bool strict_found = false;
    int first_strict = -1;
};

// Pointwise comparison over the shared index range of two sequences.
PushForwardReport compare_dominance(MomentSequence source, MomentSequence target);

// images[i] is the image of source generator i+1 as a signed word in the
// target generators.  The homomorphism property is checked on the source
// defining relations and on seeded random relator consequences;
// InvalidInput if any fails.
PushForwardReport push_forward_check(const GroupModel& source, const GroupModel& target,
                                     const std::vector<std::vector<int>>& images,
                                     int max_k, const DpLimits& limits = {},
                                     unsigned seed = 20240901);

} // namespace charmoments
