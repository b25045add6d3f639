#include "charmoments/qmoments.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "charmoments/errors.hpp"

namespace charmoments {

const char* family_name(Family f) {
    switch (f) {
    case Family::FU: return "FU";
    case Family::FO: return "FO";
    case Family::FS: return "FS";
    }
    throw InvalidInput("unknown family");
}

Family parse_family(const std::string& name) {
    if (name == "FU") return Family::FU;
    if (name == "FO") return Family::FO;
    if (name == "FS") return Family::FS;
    throw InvalidInput("unknown family '" + name + "'");
}

PartitionClass QuantumModel::partition_class() const {
    switch (family) {
    case Family::FU: return PartitionClass::NC2C;
    case Family::FO: return PartitionClass::NC2;
    case Family::FS: return PartitionClass::NC;
    }
    throw InvalidInput("unknown family");
}

unsigned QuantumModel::basis_threshold() const {
    return charmoments::basis_threshold(partition_class());
}

std::string QuantumModel::tag() const {
    return std::string(family_name(family)) + "_" + std::to_string(n);
}

const char* moment_method_name(MomentMethod m) {
    switch (m) {
    case MomentMethod::partition_count: return "partition_count";
    case MomentMethod::gram_rank: return "gram_rank";
    case MomentMethod::closed_form: return "closed_form";
    }
    throw InvalidInput("unknown moment method");
}

MomentMethod parse_moment_method(const std::string& name) {
    if (name == "partition_count" || name == "count") return MomentMethod::partition_count;
    if (name == "gram_rank" || name == "rank") return MomentMethod::gram_rank;
    if (name == "closed_form" || name == "closed") return MomentMethod::closed_form;
    throw InvalidInput("unknown moment method '" + name + "'");
}

namespace {

void check_model(const QuantumModel& model) {
    if (model.n == 0) throw InvalidInput("quantum model needs n >= 1");
}

void check_regime(const QuantumModel& model) {
    if (!model.in_basis_regime())
        throw RegimeError(model.tag() + ": method needs n >= " +
                          std::to_string(model.basis_threshold()) +
                          "; use gram_rank below the threshold");
}

// Sum over all colorings of [k] of the number of color-alternating
// non-crossing pairings: position 1 pairs with an even position (2 color
// choices for the pair), inside and outside independent.
class ColoredPairingTotal {
public:
    BigInt operator()(int k) {
        if (k % 2 != 0) return 0;
        while (static_cast<int>(memo_.size()) <= k / 2) {
            const int len = 2 * static_cast<int>(memo_.size());
            if (len == 0) {
                memo_.push_back(1);
                continue;
            }
            BigInt total = 0;
            for (int j = 2; j <= len; j += 2)
                total += 2 * memo_[static_cast<std::size_t>((j - 2) / 2)] *
                         memo_[static_cast<std::size_t>((len - j) / 2)];
            memo_.push_back(total);
        }
        return memo_[static_cast<std::size_t>(k / 2)];
    }

private:
    std::vector<BigInt> memo_;  // memo_[j] = total over colorings of length 2j
};

} // namespace

BigInt QuantumEngine::moment(const QuantumModel& model, int k, MomentMethod method) {
    check_model(model);
    if (k < 0) throw InvalidInput("moment order must be >= 0");
    if (k == 0) return 1;

    switch (method) {
    case MomentMethod::partition_count:
        if (k > limits_.max_k)
            throw ResourceError("moment order exceeds engine limit", limits_.max_k);
        return moment_by_count(model, k);
    case MomentMethod::gram_rank:
        if (k > limits_.max_k_gram)
            throw ResourceError("moment order exceeds the Gram-rank limit",
                                limits_.max_k_gram);
        return moment_by_rank(model, k);
    case MomentMethod::closed_form:
        if (k > limits_.max_k)
            throw ResourceError("moment order exceeds engine limit", limits_.max_k);
        return moment_closed_form(model, k);
    }
    throw InvalidInput("unknown moment method");
}

BigInt QuantumEngine::moment_by_count(const QuantumModel& model, int k) {
    check_regime(model);
    switch (model.family) {
    case Family::FU: {
        ColoredPairingTotal total;
        return total(k);
    }
    case Family::FO:
        return (BigInt(1) << k) *
               counter_.count(ColorWord::uniform(static_cast<std::size_t>(k)),
                              PartitionClass::NC2);
    case Family::FS:
        return (BigInt(1) << k) *
               counter_.count(ColorWord::uniform(static_cast<std::size_t>(k)),
                              PartitionClass::NC);
    }
    throw InvalidInput("unknown family");
}

BigInt QuantumEngine::moment_by_rank(const QuantumModel& model, int k) {
    const PartitionClass cls = model.partition_class();
    if (model.family == Family::FU) {
        // chi + chi* expands over all colorings of the k tensor slots.
        BigInt total = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<Color> letters(static_cast<std::size_t>(k));
            int sum = 0;
            for (int i = 0; i < k; ++i) {
                const bool conj = ((mask >> i) & 1) != 0;
                letters[static_cast<std::size_t>(i)] = conj ? Color::conj : Color::plain;
                sum += conj ? -1 : 1;
            }
            if (sum != 0) continue;  // unbalanced words have empty classes
            const ColorWord w{std::move(letters)};
            total += BigInt(rank_exact(gram_matrix(w, cls, model.n, limits_.max_gram_dim)));
        }
        return total;
    }
    const ColorWord w = ColorWord::uniform(static_cast<std::size_t>(k));
    return (BigInt(1) << k) *
           BigInt(rank_exact(gram_matrix(w, cls, model.n, limits_.max_gram_dim)));
}

BigInt QuantumEngine::moment_closed_form(const QuantumModel& model, int k) {
    check_regime(model);
    switch (model.family) {
    case Family::FU:
        if (k % 2 != 0) return 0;
        return (BigInt(1) << (k / 2)) * catalan_number(static_cast<unsigned>(k / 2));
    case Family::FO:
        if (k % 2 != 0) return 0;
        return (BigInt(1) << k) * catalan_number(static_cast<unsigned>(k / 2));
    case Family::FS:
        return (BigInt(1) << k) * catalan_number(static_cast<unsigned>(k));
    }
    throw InvalidInput("unknown family");
}

MomentSequence QuantumEngine::sequence(const QuantumModel& model, int max_k,
                                       MomentMethod method) {
    check_model(model);
    if (max_k < 0) throw InvalidInput("sequence length must be >= 0");
    MomentSequence seq;
    seq.model_tag = model.tag();
    seq.values.reserve(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) seq.values.push_back(moment(model, k, method));
    return seq;
}

MomentSequence QuantumEngine::cross_validate(const QuantumModel& model, int max_k) {
    check_model(model);
    MomentSequence base = sequence(model, max_k, MomentMethod::partition_count);

    for (int k = 0; k <= max_k; ++k) {
        const BigInt closed = moment(model, k, MomentMethod::closed_form);
        if (closed != base.values[static_cast<std::size_t>(k)])
            throw std::logic_error(model.tag() + ": closed form disagrees at k=" +
                                   std::to_string(k));
    }

    PartitionCounter counter;
    for (int k = 1; k <= std::min(max_k, limits_.max_k_gram); ++k) {
        if (model.family != Family::FU) {
            const BigInt count = counter.count(
                ColorWord::uniform(static_cast<std::size_t>(k)), model.partition_class());
            if (count > BigInt(limits_.max_gram_dim)) break;
        }
        const BigInt ranked = moment(model, k, MomentMethod::gram_rank);
        if (ranked != base.values[static_cast<std::size_t>(k)])
            throw std::logic_error(model.tag() + ": Gram rank disagrees at k=" +
                                   std::to_string(k));
    }
    return base;
}

} // namespace charmoments
