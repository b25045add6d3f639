#include "charmoments/gram.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "charmoments/errors.hpp"

namespace charmoments {

GramMatrix gram_matrix(const ColorWord& w, PartitionClass cls, unsigned n,
                       std::size_t max_dim) {
    if (n == 0) throw InvalidInput("Gram matrix needs dimension n >= 1");
    {
        PartitionCounter counter;
        const BigInt count = counter.count(w, cls);
        if (count > BigInt(max_dim))
            throw ResourceError("partition class too large for a Gram matrix (" +
                                    count.str() + " > " + std::to_string(max_dim) + ")",
                                static_cast<int>(w.size()));
    }

    GramMatrix g;
    g.word = w;
    g.cls = cls;
    g.dimension_n = n;
    g.labels = enumerate_class(w, cls);

    const std::size_t d = g.labels.size();
    g.entries.assign(d, std::vector<BigInt>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const Partition joined = join(g.labels[i], g.labels[j]);
            const BigInt value = boost::multiprecision::pow(BigInt(n),
                                                            static_cast<unsigned>(joined.block_count()));
            g.entries[i][j] = value;
            g.entries[j][i] = value;
        }
    }
    return g;
}

std::size_t rank_exact(const GramMatrix& g) { return rank_exact(g.entries); }

unsigned basis_threshold(PartitionClass cls) {
    switch (cls) {
    case PartitionClass::NC2: return 2;
    case PartitionClass::NC2C: return 2;
    case PartitionClass::NC: return 4;
    }
    throw InvalidInput("unknown partition class");
}

BigInt dim_fixed_space(const ColorWord& w, PartitionClass cls, unsigned n,
                       DimMethod method) {
    if (n == 0) throw InvalidInput("dimension n must be >= 1");
    switch (method) {
    case DimMethod::count:
        if (n < basis_threshold(cls))
            throw RegimeError("counting equals the dimension only for n >= " +
                              std::to_string(basis_threshold(cls)) + " in class " +
                              partition_class_name(cls));
        return count_partitions(w, cls);
    case DimMethod::rank:
        return BigInt(rank_exact(gram_matrix(w, cls, n)));
    }
    throw InvalidInput("unknown dimension method");
}

} // namespace charmoments
