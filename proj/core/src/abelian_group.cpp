#include "seifert/abelian_group.hpp"

#include <algorithm>

namespace seifert {

namespace {

struct SmithResult {
    std::vector<Int> diagonal;              // positive, d_1 | d_2 | ...
    std::vector<std::vector<Int>> left;     // unimodular row transform
};

// Smith normal form of an n x k integer matrix, tracking only the left
// transform L with D = L * A * (column ops).  Row operations on A are
// mirrored on L; column operations need no bookkeeping because they act on
// the relation side.
SmithResult smith_normal_form(std::vector<std::vector<Int>> a) {
    std::size_t n = a.size();
    std::size_t k = n == 0 ? 0 : a[0].size();
    SmithResult res;
    res.left.assign(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) res.left[i][i] = 1;

    auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < k; ++j) a[dst][j] -= q * a[src][j];
        for (std::size_t j = 0; j < n; ++j) res.left[dst][j] -= q * res.left[src][j];
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < n; ++i) a[i][dst] -= q * a[i][src];
    };

    std::size_t limit = std::min(n, k);
    for (std::size_t t = 0; t < limit; ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing submatrix to (t,t).
            std::size_t pi = n, pj = k;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < k; ++j)
                    if (a[i][j] != 0 &&
                        (pi == n || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n) return res;  // trailing block is zero
            if (pi != t) {
                std::swap(a[t], a[pi]);
                std::swap(res.left[t], res.left[pi]);
            }
            if (pj != t)
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_sub(i, t, q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                if (a[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_sub(j, t, q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the whole trailing block for the divisor
            // chain; if not, fold the offending row in and restart.
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < k && divides; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_sub(t, i, Int(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (a[t][t] < 0) {
            for (std::size_t j = 0; j < k; ++j) a[t][j] = -a[t][j];
            for (std::size_t j = 0; j < n; ++j) res.left[t][j] = -res.left[t][j];
        }
        res.diagonal.push_back(a[t][t]);
    }
    return res;
}

}  // namespace

AbelianGroup::AbelianGroup(IntMatrix relations, std::size_t generators)
    : generators_(generators) {
    // Work on the transpose: columns of relations^T span the relation lattice
    // inside Z^generators.
    std::vector<std::vector<Int>> a(generators, std::vector<Int>(relations.size(), Int(0)));
    for (std::size_t r = 0; r < relations.size(); ++r) {
        if (relations[r].size() != generators)
            throw internal_error("relation row of wrong length");
        for (std::size_t c = 0; c < generators; ++c) a[c][r] = relations[r][c];
    }
    SmithResult snf = smith_normal_form(std::move(a));
    if (snf.diagonal.size() != generators)
        throw invalid_input("relation matrix does not present a finite group");

    order_ = 1;
    exponent_ = 1;
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < generators; ++j) {
        const Int& d = snf.diagonal[j];
        order_ *= d;
        if (d > 1) {
            divisors_.push_back(d);
            coordinate_rows_.push_back(snf.left[j]);
            kept.push_back(j);
            exponent_ = d;  // divisor chain: the last one is the lcm
        }
    }

    // Invert the unimodular left transform (rational elimination; the result
    // is integral) and keep the columns matching the nontrivial divisors, so
    // elements can be rewritten as generator words.
    std::size_t n = generators;
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(snf.left[i][j]);
        aug[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && aug[pivot][k] == 0) ++pivot;
        if (pivot == n) throw internal_error("left transform is singular");
        std::swap(aug[k], aug[pivot]);
        Rat lead = aug[k][k];
        for (std::size_t j = 0; j < 2 * n; ++j) aug[k][j] /= lead;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || aug[i][k] == 0) continue;
            Rat factor = aug[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= factor * aug[k][j];
        }
    }
    word_columns_.assign(n, std::vector<Int>(rank(), Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < kept.size(); ++jj) {
            const Rat& entry = aug[i][n + kept[jj]];
            if (!is_integer(entry)) throw internal_error("left transform inverse not integral");
            word_columns_[i][jj] = entry.get_num();
        }
}

std::vector<Int> AbelianGroup::word_for(const GroupElement& a) const {
    std::vector<Int> word(generators_, Int(0));
    for (std::size_t i = 0; i < generators_; ++i)
        for (std::size_t j = 0; j < rank(); ++j) word[i] += word_columns_[i][j] * a.coords[j];
    return word;
}

GroupElement AbelianGroup::identity() const {
    return GroupElement{std::vector<Int>(rank(), Int(0))};
}

GroupElement AbelianGroup::generator(std::size_t i) const {
    std::vector<Int> word(generators_, Int(0));
    word[i] = 1;
    return element_from_word(word);
}

GroupElement AbelianGroup::element_from_word(const std::vector<Int>& word) const {
    if (word.size() != generators_) throw invalid_input("word has wrong number of exponents");
    GroupElement e = identity();
    for (std::size_t j = 0; j < rank(); ++j) {
        Int acc(0);
        for (std::size_t i = 0; i < generators_; ++i) acc += coordinate_rows_[j][i] * word[i];
        e.coords[j] = mod_euclid(acc, divisors_[j]);
    }
    return e;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement e = identity();
    for (std::size_t j = 0; j < rank(); ++j)
        e.coords[j] = mod_euclid(a.coords[j] + b.coords[j], divisors_[j]);
    return e;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
    GroupElement e = identity();
    for (std::size_t j = 0; j < rank(); ++j) e.coords[j] = mod_euclid(-a.coords[j], divisors_[j]);
    return e;
}

Int AbelianGroup::order_of(const GroupElement& a) const {
    Int result(1);
    for (std::size_t j = 0; j < rank(); ++j)
        result = lcm(result, divisors_[j] / gcd(divisors_[j], a.coords[j]));
    return result;
}

long AbelianGroup::element_index(const GroupElement& a) const {
    if (!order_.fits_slong_p()) throw invalid_input("group too large to index");
    long index = 0;
    for (std::size_t j = rank(); j-- > 0;)
        index = index * divisors_[j].get_si() + a.coords[j].get_si();
    return index;
}

GroupElement AbelianGroup::element_at(long index) const {
    GroupElement e = identity();
    for (std::size_t j = 0; j < rank(); ++j) {
        long d = divisors_[j].get_si();
        e.coords[j] = index % d;
        index /= d;
    }
    return e;
}

std::vector<Character> AbelianGroup::all_characters() const {
    if (!order_.fits_slong_p()) throw invalid_input("group too large to enumerate characters");
    long n = order_.get_si();
    std::vector<Character> chars;
    chars.reserve(n);
    Character chi{std::vector<Int>(rank(), Int(0))};
    for (long c = 0; c < n; ++c) {
        chars.push_back(chi);
        for (std::size_t j = rank(); j-- > 0;) {  // lexicographic increment
            chi.exponents[j] += 1;
            if (chi.exponents[j] < divisors_[j]) break;
            chi.exponents[j] = 0;
        }
    }
    return chars;
}

Character AbelianGroup::trivial_character() const {
    return Character{std::vector<Int>(rank(), Int(0))};
}

Int AbelianGroup::character_exponent(const Character& chi, const GroupElement& a) const {
    Int acc(0);
    for (std::size_t j = 0; j < rank(); ++j)
        acc += chi.exponents[j] * (exponent_ / divisors_[j]) * a.coords[j];
    return mod_euclid(acc, exponent_);
}

IntMatrix homology_relations(const SeifertData& s) {
    std::size_t nu = s.nu();
    IntMatrix rel(nu + 1, std::vector<Int>(nu + 1, Int(0)));
    rel[0][0] = -s.b;
    for (std::size_t i = 0; i < nu; ++i) rel[0][i + 1] = -s.arms[i].omega;
    for (std::size_t i = 0; i < nu; ++i) {
        rel[i + 1][0] = 1;
        rel[i + 1][i + 1] = -s.arms[i].alpha;
    }
    return rel;
}

AbelianGroup homology_group(const SeifertData& s) {
    IntMatrix rel = homology_relations(s);
    Int det = determinant(rel);
    if (abs(det) != s.h_order)
        throw internal_error("homology relation determinant disagrees with |H|");
    AbelianGroup g(rel, s.nu() + 1);
    if (g.order() != s.h_order)
        throw internal_error("Smith normal form order disagrees with |H|");
    if (g.order_of(g.generator(0)) != s.o)
        throw internal_error("order of the generic fiber class disagrees with o");
    return g;
}

}  // namespace seifert
