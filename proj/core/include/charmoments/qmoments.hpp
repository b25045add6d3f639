#pragma once

#include <string>

#include "charmoments/bigint.hpp"
#include "charmoments/gram.hpp"
#include "charmoments/moment_sequence.hpp"
#include "charmoments/partition_count.hpp"

namespace charmoments {

// The three families of free quantum groups covered by the engine:
// free unitary (FU), free orthogonal (FO), free symmetric (FS).
enum class Family : unsigned char { FU, FO, FS };

const char* family_name(Family f);
Family parse_family(const std::string& name);

struct QuantumModel {
    Family family = Family::FU;
    unsigned n = 2;

    // Class indexing the fixed-vector basis of this family.
    PartitionClass partition_class() const;

    // Least n at which partition counting equals the true dimension.
    unsigned basis_threshold() const;
    bool in_basis_regime() const { return n >= basis_threshold(); }

    std::string tag() const;  // e.g. "FU_2"
};

enum class MomentMethod : unsigned char {
    partition_count,  // dimension = number of partitions; basis regime only
    gram_rank,        // dimension = exact Gram rank; any n
    closed_form,      // family-specific formula in Catalan numbers
};

const char* moment_method_name(MomentMethod m);
MomentMethod parse_moment_method(const std::string& name);

struct EngineLimits {
    int max_k = 64;          // counting and closed forms
    int max_k_gram = 8;      // Gram-rank moments
    std::size_t max_gram_dim = 300;  // largest Gram matrix formed
};

// Moments of the self-adjoint main character chi + chi* (FU) or chi
// (FO, FS): m_k is the dimension of the fixed space of the k-th tensor
// power, summed over colorings for FU.
class QuantumEngine {
public:
    explicit QuantumEngine(EngineLimits limits = {}) : limits_(limits) {}

    BigInt moment(const QuantumModel& model, int k, MomentMethod method);
    MomentSequence sequence(const QuantumModel& model, int max_k, MomentMethod method);

    // Recomputes moments with every method valid for the model and
    // throws std::logic_error on any disagreement.  Returns the sequence.
    MomentSequence cross_validate(const QuantumModel& model, int max_k);

    const EngineLimits& limits() const { return limits_; }

private:
    BigInt moment_by_count(const QuantumModel& model, int k);
    BigInt moment_by_rank(const QuantumModel& model, int k);
    BigInt moment_closed_form(const QuantumModel& model, int k);

    EngineLimits limits_;
    PartitionCounter counter_;
};

} // namespace charmoments
