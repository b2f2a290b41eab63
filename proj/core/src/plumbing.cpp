#include "seifert/plumbing.hpp"

#include <sstream>

#include "seifert/continued_fraction.hpp"

namespace seifert {

namespace {
constexpr std::size_t kMaxVertices = 1u << 20;
}

PlumbingGraph plumbing_graph(const SeifertData& s) {
    PlumbingGraph g;
    g.weights.push_back(s.b);
    for (const auto& arm : s.arms) {
        std::vector<int> chain;
        int prev = g.center();
        if (arm.omega == 0) throw invalid_input("omega_i = 0 has no resolution chain");
        ContinuedFraction cf = negative_continued_fraction(arm.alpha, arm.omega);
        for (const Int& entry : cf.entries) {
            if (g.weights.size() >= kMaxVertices)
                throw invalid_input("plumbing graph too large");
            int v = static_cast<int>(g.weights.size());
            g.weights.push_back(-entry);
            g.edges.emplace_back(prev, v);
            chain.push_back(v);
            prev = v;
        }
        g.arms.push_back(std::move(chain));
    }
    return g;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
    std::size_t n = g.vertex_count();
    IntMatrix m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t v = 0; v < n; ++v) m[v][v] = g.weights[v];
    for (const auto& [a, b] : g.edges) {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    if (!is_negative_definite(m))
        throw invalid_input("intersection matrix is not negative definite");
    return m;
}

bool is_negative_definite(const IntMatrix& m) {
    // Symmetric Gaussian elimination; the matrix is negative definite exactly
    // when every pivot is negative (a zero pivot means an indefinite or
    // singular leading minor).
    std::size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] >= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    return true;
}

Int determinant(IntMatrix m) {
    // Fraction-free (Bareiss) elimination.
    std::size_t n = m.size();
    Int sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return Int(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;  // exact by Sylvester's identity
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return n == 0 ? Int(1) : sign * m[n - 1][n - 1];
}

namespace {

// Solves a*x = rhs by exact rational Gaussian elimination with row pivoting.
std::vector<Rat> solve(const IntMatrix& matrix, std::vector<Rat> rhs) {
    std::size_t n = matrix.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(matrix[i][j]);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) throw invalid_input("singular intersection matrix");
        std::swap(a[k], a[pivot]);
        std::swap(rhs[k], rhs[pivot]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
            rhs[i] -= factor * rhs[k];
        }
    }
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t k = n; k-- > 0;) {
        Rat acc = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a[k][j] * x[j];
        x[k] = acc / a[k][k];
    }
    return x;
}

}  // namespace

CanonicalCycle canonical_cycle(const PlumbingGraph& g) {
    IntMatrix m = intersection_matrix(g);
    std::size_t n = g.vertex_count();
    std::vector<Rat> rhs(n);
    for (std::size_t v = 0; v < n; ++v) rhs[v] = Rat(g.weights[v] + 2);

    CanonicalCycle z;
    z.coefficients = solve(m, rhs);
    // Z.Z = sum_v r_v (Z.E_v) = sum_v r_v (E_v.E_v + 2).
    z.k_squared = 0;
    for (std::size_t v = 0; v < n; ++v) z.k_squared += z.coefficients[v] * rhs[v];
    return z;
}

Rat k_squared_plus_vertex_count(const PlumbingGraph& g) {
    return canonical_cycle(g).k_squared + Rat(static_cast<long>(g.vertex_count()));
}

std::string to_dot(const PlumbingGraph& g) {
    std::ostringstream out;
    out << "graph plumbing {\n";
    out << "  v0 [label=\"" << g.weights[0].get_str() << "\", shape=doublecircle];\n";
    for (std::size_t v = 1; v < g.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << g.weights[v].get_str() << "\", shape=circle];\n";
    for (const auto& arm : g.arms) {
        int prev = g.center();
        for (int v : arm) {
            out << "  v" << prev << " -- v" << v << ";\n";
            prev = v;
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace seifert
