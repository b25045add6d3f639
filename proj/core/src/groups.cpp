#include "charmoments/groups.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "charmoments/serialization.hpp"

namespace charmoments {

namespace {

struct ElementHash {
    std::size_t operator()(const GroupElement& e) const {
        std::size_t h = 1469598103934665603ULL;
        for (std::int32_t v : e) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ULL;
        }
        return h;
    }
};

std::vector<int> inverse_word(const std::vector<int>& word) {
    std::vector<int> out(word.rbegin(), word.rend());
    for (int& s : out) s = -s;
    return out;
}

class FreeGroup final : public GroupModel {
public:
    explicit FreeGroup(unsigned n) : n_(n) {}

    std::string name() const override { return "free:" + std::to_string(n_); }
    unsigned generator_count() const override { return n_; }
    GroupElement identity() const override { return {}; }

    GroupElement generator(unsigned i) const override {
        if (i >= n_) throw InvalidInput("generator index out of range");
        return {static_cast<std::int32_t>(i) + 1};
    }

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
        GroupElement out = a;
        for (std::int32_t letter : b) {
            if (!out.empty() && out.back() == -letter)
                out.pop_back();
            else
                out.push_back(letter);
        }
        return out;
    }

    GroupElement invert(const GroupElement& a) const override {
        GroupElement out(a.rbegin(), a.rend());
        for (auto& letter : out) letter = -letter;
        return out;
    }

    GroupElement canonicalize(const GroupElement& a) const override {
        return multiply({}, a);
    }

    std::optional<int> cayley_tree_degree() const override {
        return static_cast<int>(2 * n_);
    }

    std::vector<std::vector<int>> defining_relations() const override { return {}; }

private:
    unsigned n_;
};

class FreeAbelian final : public GroupModel {
public:
    explicit FreeAbelian(unsigned n) : n_(n) {}

    std::string name() const override { return "abelian:" + std::to_string(n_); }
    unsigned generator_count() const override { return n_; }
    GroupElement identity() const override { return GroupElement(n_, 0); }

    GroupElement generator(unsigned i) const override {
        if (i >= n_) throw InvalidInput("generator index out of range");
        GroupElement e(n_, 0);
        e[i] = 1;
        return e;
    }

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
        GroupElement out = a;
        for (std::size_t i = 0; i < n_; ++i) out[i] += b[i];
        return out;
    }

    GroupElement invert(const GroupElement& a) const override {
        GroupElement out = a;
        for (auto& v : out) v = -v;
        return out;
    }

    std::vector<std::vector<int>> defining_relations() const override {
        std::vector<std::vector<int>> rels;
        for (int i = 1; i <= static_cast<int>(n_); ++i)
            for (int j = i + 1; j <= static_cast<int>(n_); ++j)
                rels.push_back({i, j, -i, -j});
        return rels;
    }

private:
    unsigned n_;
};

class Cyclic final : public GroupModel {
public:
    explicit Cyclic(unsigned order) : order_(order) {}

    std::string name() const override { return "cyclic:" + std::to_string(order_); }
    unsigned generator_count() const override { return 1; }
    GroupElement identity() const override { return {0}; }

    GroupElement generator(unsigned i) const override {
        if (i != 0) throw InvalidInput("generator index out of range");
        return {order_ == 1 ? 0 : 1};
    }

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
        return {reduce(a[0] + b[0])};
    }

    GroupElement invert(const GroupElement& a) const override { return {reduce(-a[0])}; }

    GroupElement canonicalize(const GroupElement& a) const override {
        return {reduce(a[0])};
    }

    std::vector<std::vector<int>> defining_relations() const override {
        return {std::vector<int>(order_, 1)};
    }

private:
    std::int32_t reduce(std::int32_t v) const {
        const auto m = static_cast<std::int32_t>(order_);
        return ((v % m) + m) % m;
    }

    unsigned order_;
};

class DirectProduct final : public GroupModel {
public:
    DirectProduct(std::unique_ptr<GroupModel> a, std::unique_ptr<GroupModel> b)
        : a_(std::move(a)), b_(std::move(b)) {}

    std::string name() const override {
        return "product:" + a_->name() + "+" + b_->name();
    }

    unsigned generator_count() const override {
        return a_->generator_count() + b_->generator_count();
    }

    GroupElement identity() const override {
        return combine(a_->identity(), b_->identity());
    }

    GroupElement generator(unsigned i) const override {
        if (i < a_->generator_count())
            return combine(a_->generator(i), b_->identity());
        if (i < generator_count())
            return combine(a_->identity(), b_->generator(i - a_->generator_count()));
        throw InvalidInput("generator index out of range");
    }

    GroupElement multiply(const GroupElement& x, const GroupElement& y) const override {
        const auto [xa, xb] = split(x);
        const auto [ya, yb] = split(y);
        return combine(a_->multiply(xa, ya), b_->multiply(xb, yb));
    }

    GroupElement invert(const GroupElement& x) const override {
        const auto [xa, xb] = split(x);
        return combine(a_->invert(xa), b_->invert(xb));
    }

    GroupElement canonicalize(const GroupElement& x) const override {
        const auto [xa, xb] = split(x);
        return combine(a_->canonicalize(xa), b_->canonicalize(xb));
    }

    std::vector<std::vector<int>> defining_relations() const override {
        std::vector<std::vector<int>> rels = a_->defining_relations();
        const int na = static_cast<int>(a_->generator_count());
        for (auto rel : b_->defining_relations()) {
            for (int& s : rel) s = s > 0 ? s + na : s - na;
            rels.push_back(std::move(rel));
        }
        for (int i = 1; i <= na; ++i)
            for (int j = na + 1; j <= static_cast<int>(generator_count()); ++j)
                rels.push_back({i, j, -i, -j});
        return rels;
    }

private:
    // Layout: [size of the a-part, a-part..., b-part...].
    GroupElement combine(const GroupElement& ea, const GroupElement& eb) const {
        GroupElement out;
        out.reserve(1 + ea.size() + eb.size());
        out.push_back(static_cast<std::int32_t>(ea.size()));
        out.insert(out.end(), ea.begin(), ea.end());
        out.insert(out.end(), eb.begin(), eb.end());
        return out;
    }

    std::pair<GroupElement, GroupElement> split(const GroupElement& e) const {
        if (e.empty() || e[0] < 0 || static_cast<std::size_t>(e[0]) + 1 > e.size())
            throw InvalidInput("malformed product element");
        const auto na = static_cast<std::size_t>(e[0]);
        return {GroupElement(e.begin() + 1, e.begin() + 1 + static_cast<std::ptrdiff_t>(na)),
                GroupElement(e.begin() + 1 + static_cast<std::ptrdiff_t>(na), e.end())};
    }

    std::unique_ptr<GroupModel> a_;
    std::unique_ptr<GroupModel> b_;
};

// Z_{o_1} * ... * Z_{o_n} with syllable normal form: elements are flat
// lists (i_1, e_1, i_2, e_2, ...) of syllables g_{i}^{e} with adjacent
// factor indices distinct and exponents nonzero (reduced mod the factor
// order when finite).
class FreeProductCyclic final : public GroupModel {
public:
    explicit FreeProductCyclic(std::vector<unsigned> orders) : orders_(std::move(orders)) {}

    std::string name() const override {
        std::string out = "freeprod:";
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(orders_[i]);
        }
        return out;
    }

    unsigned generator_count() const override {
        return static_cast<unsigned>(orders_.size());
    }

    GroupElement identity() const override { return {}; }

    GroupElement generator(unsigned i) const override {
        if (i >= orders_.size()) throw InvalidInput("generator index out of range");
        if (orders_[i] == 1) return {};
        return {static_cast<std::int32_t>(i) + 1, 1};
    }

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
        GroupElement out = a;
        for (std::size_t s = 0; s + 1 < b.size(); s += 2)
            append_syllable(out, b[s], b[s + 1]);
        return out;
    }

    GroupElement invert(const GroupElement& a) const override {
        GroupElement out;
        out.reserve(a.size());
        for (std::size_t s = a.size(); s >= 2; s -= 2) {
            out.push_back(a[s - 2]);
            out.push_back(reduce_exponent(a[s - 2], -a[s - 1]));
        }
        return out;
    }

    std::optional<int> cayley_tree_degree() const override {
        for (unsigned o : orders_)
            if (o != 0) return std::nullopt;
        return static_cast<int>(2 * orders_.size());
    }

    std::vector<std::vector<int>> defining_relations() const override {
        std::vector<std::vector<int>> rels;
        for (std::size_t i = 0; i < orders_.size(); ++i)
            if (orders_[i] != 0)
                rels.push_back(std::vector<int>(orders_[i], static_cast<int>(i) + 1));
        return rels;
    }

private:
    std::int32_t reduce_exponent(std::int32_t index, std::int32_t e) const {
        const unsigned order = orders_[static_cast<std::size_t>(index) - 1];
        if (order == 0) return e;
        const auto m = static_cast<std::int32_t>(order);
        return ((e % m) + m) % m;
    }

    void append_syllable(GroupElement& word, std::int32_t index, std::int32_t e) const {
        e = reduce_exponent(index, e);
        if (e == 0) return;
        if (word.size() >= 2 && word[word.size() - 2] == index) {
            const std::int32_t merged = reduce_exponent(index, word.back() + e);
            if (merged == 0) {
                word.pop_back();
                word.pop_back();
            } else {
                word.back() = merged;
            }
            return;
        }
        word.push_back(index);
        word.push_back(e);
    }

    std::vector<unsigned> orders_;
};

class FiniteTableGroup final : public GroupModel {
public:
    FiniteTableGroup(CayleyTable table, std::string tag)
        : table_(std::move(table)), tag_(std::move(tag)) {
        table_.validate();
        inverses_.resize(table_.order);
        for (std::size_t a = 0; a < table_.order; ++a)
            for (std::size_t b = 0; b < table_.order; ++b)
                if (table_.table[a][b] == table_.identity) inverses_[a] = static_cast<unsigned>(b);
        build_words();
    }

    std::string name() const override { return tag_; }
    unsigned generator_count() const override {
        return static_cast<unsigned>(table_.generators.size());
    }
    GroupElement identity() const override {
        return {static_cast<std::int32_t>(table_.identity)};
    }
    GroupElement generator(unsigned i) const override {
        if (i >= table_.generators.size()) throw InvalidInput("generator index out of range");
        return {static_cast<std::int32_t>(table_.generators[i])};
    }
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
        return {static_cast<std::int32_t>(table_.table[index(a)][index(b)])};
    }
    GroupElement invert(const GroupElement& a) const override {
        return {static_cast<std::int32_t>(inverses_[index(a)])};
    }

    // Cayley-graph presentation: for every element x and generator g, the
    // relator word(x) g word(xg)^-1.
    std::vector<std::vector<int>> defining_relations() const override {
        std::vector<std::vector<int>> rels;
        for (std::size_t x = 0; x < table_.order; ++x) {
            for (std::size_t gi = 0; gi < table_.generators.size(); ++gi) {
                const std::size_t xg = table_.table[x][table_.generators[gi]];
                std::vector<int> rel = words_[x];
                rel.push_back(static_cast<int>(gi) + 1);
                const std::vector<int> back = inverse_word(words_[xg]);
                rel.insert(rel.end(), back.begin(), back.end());
                rels.push_back(std::move(rel));
            }
        }
        return rels;
    }

private:
    std::size_t index(const GroupElement& a) const {
        if (a.size() != 1 || a[0] < 0 || static_cast<std::size_t>(a[0]) >= table_.order)
            throw InvalidInput("malformed table group element");
        return static_cast<std::size_t>(a[0]);
    }

    // BFS from the identity assigns each element a generator word.
    void build_words() {
        words_.assign(table_.order, {});
        std::vector<bool> seen(table_.order, false);
        seen[table_.identity] = true;
        std::queue<std::size_t> todo;
        todo.push(table_.identity);
        while (!todo.empty()) {
            const std::size_t x = todo.front();
            todo.pop();
            for (std::size_t gi = 0; gi < table_.generators.size(); ++gi) {
                for (int sign : {1, -1}) {
                    const std::size_t g = sign > 0
                                              ? table_.generators[gi]
                                              : inverses_[table_.generators[gi]];
                    const std::size_t y = table_.table[x][g];
                    if (seen[y]) continue;
                    seen[y] = true;
                    words_[y] = words_[x];
                    words_[y].push_back(sign * (static_cast<int>(gi) + 1));
                    todo.push(y);
                }
            }
        }
    }

    CayleyTable table_;
    std::string tag_;
    std::vector<unsigned> inverses_;
    std::vector<std::vector<int>> words_;
};

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, sep)) parts.push_back(current);
    return parts;
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput("invalid " + what + " '" + text + "'");
    try {
        const unsigned long v = std::stoul(text);
        if (v > std::numeric_limits<unsigned>::max()) throw std::out_of_range(text);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw InvalidInput("invalid " + what + " '" + text + "'");
    }
}

} // namespace

GroupElement GroupModel::canonicalize(const GroupElement& a) const { return a; }

std::vector<GroupElement> GroupModel::letters() const {
    std::vector<GroupElement> out;
    out.reserve(2 * generator_count());
    for (unsigned i = 0; i < generator_count(); ++i) {
        out.push_back(generator(i));
        out.push_back(invert(generator(i)));
    }
    return out;
}

GroupElement GroupModel::evaluate_word(const std::vector<int>& word) const {
    GroupElement acc = identity();
    for (int s : word) {
        if (s == 0) throw InvalidInput("signed generator word may not contain 0");
        const unsigned i = static_cast<unsigned>(s > 0 ? s : -s) - 1;
        if (i >= generator_count())
            throw InvalidInput("generator index out of range in word");
        acc = s > 0 ? multiply(acc, generator(i)) : multiply(acc, invert(generator(i)));
    }
    return acc;
}

void CayleyTable::validate() const {
    if (order == 0) throw InvalidInput("Cayley table must have positive order");
    if (table.size() != order) throw InvalidInput("Cayley table has wrong row count");
    for (const auto& row : table) {
        if (row.size() != order) throw InvalidInput("Cayley table has wrong column count");
        for (unsigned v : row)
            if (v >= order) throw InvalidInput("Cayley table entry out of range");
    }
    if (identity >= order) throw InvalidInput("Cayley table identity out of range");

    for (std::size_t a = 0; a < order; ++a) {
        if (table[identity][a] != a || table[a][identity] != a)
            throw InvalidInput("Cayley table identity does not act as identity");
        std::vector<bool> row_seen(order, false), col_seen(order, false);
        for (std::size_t b = 0; b < order; ++b) {
            if (row_seen[table[a][b]]) throw InvalidInput("Cayley table row is not a permutation");
            row_seen[table[a][b]] = true;
            if (col_seen[table[b][a]]) throw InvalidInput("Cayley table column is not a permutation");
            col_seen[table[b][a]] = true;
        }
    }

    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            for (std::size_t c = 0; c < order; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InvalidInput("Cayley table is not associative");

    if (generators.empty()) throw InvalidInput("Cayley table needs at least one generator");
    for (unsigned g : generators)
        if (g >= order) throw InvalidInput("Cayley table generator out of range");
    std::vector<bool> reached(order, false);
    reached[identity] = true;
    std::queue<std::size_t> todo;
    todo.push(identity);
    std::size_t count = 1;
    while (!todo.empty()) {
        const std::size_t x = todo.front();
        todo.pop();
        for (unsigned g : generators) {
            for (std::size_t y : {static_cast<std::size_t>(table[x][g]),
                                  [&] {
                                      std::size_t inv = 0;
                                      for (std::size_t b = 0; b < order; ++b)
                                          if (table[g][b] == identity) inv = b;
                                      return static_cast<std::size_t>(table[x][inv]);
                                  }()}) {
                if (!reached[y]) {
                    reached[y] = true;
                    ++count;
                    todo.push(y);
                }
            }
        }
    }
    if (count != order) throw InvalidInput("Cayley table generators do not generate");
}

std::unique_ptr<GroupModel> make_free_group(unsigned n) {
    if (n == 0) throw InvalidInput("free group needs at least one generator");
    return std::make_unique<FreeGroup>(n);
}

std::unique_ptr<GroupModel> make_free_abelian(unsigned n) {
    if (n == 0) throw InvalidInput("free abelian group needs at least one generator");
    return std::make_unique<FreeAbelian>(n);
}

std::unique_ptr<GroupModel> make_cyclic(unsigned order) {
    if (order == 0) throw InvalidInput("cyclic group needs positive order");
    return std::make_unique<Cyclic>(order);
}

std::unique_ptr<GroupModel> make_direct_product(std::unique_ptr<GroupModel> a,
                                                std::unique_ptr<GroupModel> b) {
    if (!a || !b) throw InvalidInput("direct product needs two groups");
    return std::make_unique<DirectProduct>(std::move(a), std::move(b));
}

std::unique_ptr<GroupModel> make_free_product_cyclic(const std::vector<unsigned>& orders) {
    if (orders.empty()) throw InvalidInput("free product needs at least one factor");
    return std::make_unique<FreeProductCyclic>(orders);
}

std::unique_ptr<GroupModel> make_finite_table_group(CayleyTable table, std::string tag) {
    return std::make_unique<FiniteTableGroup>(std::move(table), std::move(tag));
}

std::unique_ptr<GroupModel> parse_group_preset(const std::string& preset) {
    const auto colon = preset.find(':');
    if (colon == std::string::npos)
        throw InvalidInput("group preset needs the form kind:args, got '" + preset + "'");
    const std::string kind = preset.substr(0, colon);
    const std::string args = preset.substr(colon + 1);

    if (kind == "free") return make_free_group(parse_unsigned(args, "generator count"));
    if (kind == "abelian") return make_free_abelian(parse_unsigned(args, "generator count"));
    if (kind == "cyclic") return make_cyclic(parse_unsigned(args, "order"));
    if (kind == "freeprod") {
        std::vector<unsigned> orders;
        for (const auto& part : split_on(args, ','))
            orders.push_back(parse_unsigned(part, "factor order"));
        return make_free_product_cyclic(orders);
    }
    if (kind == "product") {
        const auto plus = args.find('+');
        if (plus == std::string::npos)
            throw InvalidInput("product preset needs the form product:A+B");
        return make_direct_product(parse_group_preset(args.substr(0, plus)),
                                   parse_group_preset(args.substr(plus + 1)));
    }
    if (kind == "table") {
        CayleyTable table = cayley_table_from_json(read_text_file(args));
        return make_finite_table_group(std::move(table), preset);
    }
    throw InvalidInput("unknown group preset kind '" + kind + "'");
}

namespace {

// Counts closed walks on the 2n-regular tree: state = distance from the
// start; the root has 2n forward edges, every other vertex 2n-1 forward
// and one backward.
MomentSequence radial_tree_moments(const GroupModel& model, int max_k, int degree) {
    MomentSequence seq;
    seq.model_tag = model.name();
    std::vector<BigInt> w(static_cast<std::size_t>(max_k) + 2, 0);
    w[0] = 1;
    seq.values.push_back(1);
    std::vector<BigInt> next(w.size(), 0);
    for (int j = 1; j <= max_k; ++j) {
        next[0] = w[1];
        for (std::size_t d = 1; d < w.size(); ++d) {
            next[d] = (d == 1 ? BigInt(degree) * w[0] : BigInt(degree - 1) * w[d - 1]);
            if (d + 1 < w.size()) next[d] += w[d + 1];
        }
        std::swap(w, next);
        seq.values.push_back(w[0]);
    }
    return seq;
}

MomentSequence element_dp_moments(const GroupModel& model, int max_k,
                                  const std::vector<GroupElement>& letters,
                                  const DpLimits& limits, const std::string& tag) {
    using Dist = std::unordered_map<GroupElement, BigInt, ElementHash>;

    const GroupElement id = model.identity();
    MomentSequence seq;
    seq.model_tag = tag;
    seq.values.push_back(1);

    Dist current;
    current.emplace(id, 1);
    for (int j = 1; j <= max_k; ++j) {
        Dist next;
        next.reserve(current.size() * 2);
        std::size_t bytes = 0;
        for (const auto& [element, ways] : current) {
            for (const auto& letter : letters) {
                GroupElement moved = model.multiply(element, letter);
                auto [it, fresh] = next.try_emplace(std::move(moved), 0);
                if (fresh) bytes += 96 + 4 * it->first.size();
                it->second += ways;
                if (bytes > limits.memory_budget_bytes)
                    throw ResourceError("walk state space exceeds the memory budget at k=" +
                                            std::to_string(j),
                                        j - 1);
            }
        }
        current = std::move(next);
        const auto found = current.find(id);
        seq.values.push_back(found == current.end() ? BigInt(0) : found->second);
    }
    return seq;
}

} // namespace

MomentSequence group_moment_sequence(const GroupModel& model, int max_k,
                                     const DpLimits& limits) {
    if (max_k < 0) throw InvalidInput("sequence length must be >= 0");
    if (const auto degree = model.cayley_tree_degree())
        return radial_tree_moments(model, max_k, *degree);
    return element_dp_moments(model, max_k, model.letters(), limits, model.name());
}

MomentSequence group_moment_sequence(const GroupModel& model, int max_k,
                                     const std::vector<GroupElement>& walk_letters,
                                     const DpLimits& limits, const std::string& tag) {
    if (max_k < 0) throw InvalidInput("sequence length must be >= 0");
    return element_dp_moments(model, max_k, walk_letters, limits, tag);
}

PushForwardReport compare_dominance(MomentSequence source, MomentSequence target) {
    PushForwardReport report;
    report.source = std::move(source);
    report.target = std::move(target);
    report.monotone = true;
    const int shared = std::min(report.source.max_k(), report.target.max_k());
    for (int k = 0; k <= shared; ++k) {
        const auto& s = report.source.values[static_cast<std::size_t>(k)];
        const auto& t = report.target.values[static_cast<std::size_t>(k)];
        if (s > t) report.monotone = false;
        if (s < t && !report.strict_found) {
            report.strict_found = true;
            report.first_strict = k;
        }
    }
    return report;
}

PushForwardReport push_forward_check(const GroupModel& source, const GroupModel& target,
                                     const std::vector<std::vector<int>>& images,
                                     int max_k, const DpLimits& limits, unsigned seed) {
    if (images.size() != source.generator_count())
        throw InvalidInput("need one image word per source generator");

    // A signed source word maps to a signed target word by substitution.
    const auto map_word = [&](const std::vector<int>& word) {
        std::vector<int> out;
        for (int s : word) {
            if (s == 0) throw InvalidInput("signed generator word may not contain 0");
            const auto i = static_cast<std::size_t>(s > 0 ? s : -s) - 1;
            if (i >= images.size())
                throw InvalidInput("generator index out of range in word");
            const auto& image = images[i];
            if (s > 0)
                out.insert(out.end(), image.begin(), image.end());
            else {
                const auto back = inverse_word(image);
                out.insert(out.end(), back.begin(), back.end());
            }
        }
        return out;
    };

    const GroupElement target_id = target.identity();
    const auto relations = source.defining_relations();
    for (const auto& rel : relations)
        if (target.evaluate_word(map_word(rel)) != target_id)
            throw InvalidInput("images violate a defining relation of the source group");

    // Seeded spot-check on random consequences c r c^-1 of the relations.
    if (!relations.empty()) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<std::size_t> pick_rel(0, relations.size() - 1);
        std::uniform_int_distribution<int> pick_len(0, 6);
        std::uniform_int_distribution<int> pick_gen(1, static_cast<int>(source.generator_count()));
        std::uniform_int_distribution<int> pick_sign(0, 1);
        for (int trial = 0; trial < 32; ++trial) {
            std::vector<int> conj;
            const int len = pick_len(rng);
            for (int i = 0; i < len; ++i)
                conj.push_back(pick_sign(rng) ? pick_gen(rng) : -pick_gen(rng));
            std::vector<int> word = conj;
            const auto& rel = relations[pick_rel(rng)];
            word.insert(word.end(), rel.begin(), rel.end());
            const auto back = inverse_word(conj);
            word.insert(word.end(), back.begin(), back.end());
            if (target.evaluate_word(map_word(word)) != target_id)
                throw InvalidInput("images violate a consequence of the source relations");
        }
    }

    std::vector<GroupElement> target_letters;
    target_letters.reserve(2 * images.size());
    for (const auto& image : images) {
        GroupElement e = target.evaluate_word(image);
        target_letters.push_back(target.invert(e));
        target_letters.push_back(std::move(e));
    }
    return compare_dominance(group_moment_sequence(source, max_k, limits),
                             group_moment_sequence(target, max_k, target_letters, limits,
                                                   target.name() + ":images"));
}

} // namespace charmoments
