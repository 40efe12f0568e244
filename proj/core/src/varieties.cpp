#include "cremona/varieties.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cremona/cumulants.hpp"
#include "cremona/text_io.hpp"

namespace cremona {

namespace {

std::string ij(int i, int j) { return std::to_string(i) + std::to_string(j); }

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Polynomial var(const RegistryPtr& reg, VarId v) { return Polynomial::variable(reg, v); }

void dedupe_up_to_sign(std::vector<Polynomial>& eqs) {
    std::set<std::string> seen;
    std::vector<Polynomial> out;
    for (auto& e : eqs) {
        if (e.is_zero()) continue;
        Polynomial n = e.leading_term().coeff < 0 ? -e : e;
        std::string key = to_text(n);
        if (seen.insert(key).second) out.push_back(std::move(n));
    }
    eqs = std::move(out);
}

std::vector<VarId> declare_params(CatalogEntry& e, int count) {
    std::vector<VarId> t;
    for (int i = 1; i <= count; ++i) t.push_back(e.reg->declare("t" + std::to_string(i)));
    return t;
}

}  // namespace

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    size_t n = m.size();
    if (n == 0) throw error("determinant of an empty matrix");
    if (n == 1) return m[0][0];
    const RegistryPtr& reg = m[0][0].registry();
    Polynomial det(reg);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * determinant(minor);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

Polynomial pfaffian(const std::vector<std::vector<Polynomial>>& m) {
    size_t n = m.size();
    if (n % 2 != 0) throw error("pfaffian requires even order");
    if (n == 0) throw error("pfaffian of an empty matrix");
    if (n == 2) return m[0][1];
    const RegistryPtr& reg = m[0][1].registry();
    Polynomial pf(reg);
    for (size_t j = 1; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (size_t r = 1; r < n; ++r) {
            if (r == j) continue;
            std::vector<Polynomial> row;
            for (size_t c = 1; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * pfaffian(minor);
        pf = (j % 2 == 1) ? pf + term : pf - term;
    }
    return pf;
}

std::vector<Polynomial> matrix_minors(const std::vector<std::vector<Polynomial>>& m, int k) {
    size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::vector<Polynomial> out;
    std::vector<int> ri(k), ci(k);
    auto rec_cols = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>());
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) sub[a].push_back(m[ri[a]][ci[b]]);
            out.push_back(determinant(sub));
            return;
        }
        for (int c = start; c < static_cast<int>(cols); ++c) {
            ci[pos] = c;
            self(self, pos + 1, c + 1);
        }
    };
    auto rec_rows = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            rec_cols(rec_cols, 0, 0);
            return;
        }
        for (int r = start; r < static_cast<int>(rows); ++r) {
            ri[pos] = r;
            self(self, pos + 1, r + 1);
        }
    };
    rec_rows(rec_rows, 0, 0);
    return out;
}

// --------------------------------------------------------------- factories

CatalogEntry segre(int m, int n) {
    if (m < 1 || n < 1 || m > 4 || n > 4) throw error("segre: m, n must lie in [1, 4]");
    CatalogEntry e;
    e.name = "segre:" + std::to_string(m) + "," + std::to_string(n);
    e.reg = make_registry();
    e.x_chart = "x00";
    e.y_chart = "y00";
    e.ambient_dim = (m + 1) * (n + 1) - 1;
    e.reg->declare(e.x_chart);
    for (int i = 1; i <= m; ++i) e.x_vars.push_back(e.reg->declare("x" + ij(i, 0)));
    for (int j = 1; j <= n; ++j) e.x_vars.push_back(e.reg->declare("x" + ij(0, j)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) e.x_vars.push_back(e.reg->declare("x" + ij(i, j)));
    e.reg->declare(e.y_chart);
    for (size_t k = 0; k < e.x_vars.size(); ++k) {
        std::string xn = e.reg->name_of(e.x_vars[k]);
        e.y_vars.push_back(e.reg->declare("y" + xn.substr(1)));
    }
    std::vector<VarId> t = declare_params(e, m + n);  // rows then columns

    e.param.reg = e.reg;
    e.param.params = t;
    e.param.normal_form = true;
    size_t k = 0;
    for (int i = 1; i <= m; ++i)
        e.param.coords.emplace_back(e.x_vars[k++], RationalFunction::variable(e.reg, t[i - 1]));
    for (int j = 1; j <= n; ++j)
        e.param.coords.emplace_back(e.x_vars[k++],
                                    RationalFunction::variable(e.reg, t[m + j - 1]));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            e.param.coords.emplace_back(
                e.x_vars[k++],
                RationalFunction(var(e.reg, t[i - 1]) * var(e.reg, t[m + j - 1])));

    // 2x2 minors of the (m+1)x(n+1) matrix on the chart.
    auto entry = [&](int i, int j) -> Polynomial {
        if (i == 0 && j == 0) return Polynomial::constant(e.reg, 1);
        if (j == 0) return var(e.reg, e.reg->id_of("x" + ij(i, 0)));
        if (i == 0) return var(e.reg, e.reg->id_of("x" + ij(0, j)));
        return var(e.reg, e.reg->id_of("x" + ij(i, j)));
    };
    for (int i1 = 0; i1 <= m; ++i1)
        for (int i2 = i1 + 1; i2 <= m; ++i2)
            for (int j1 = 0; j1 <= n; ++j1)
                for (int j2 = j1 + 1; j2 <= n; ++j2)
                    e.implicit_eqs.push_back(entry(i1, j1) * entry(i2, j2) -
                                             entry(i1, j2) * entry(i2, j1));
    dedupe_up_to_sign(e.implicit_eqs);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            e.expected_linear_image.push_back(e.reg->id_of("y" + ij(i, j)));
    return e;
}

CatalogEntry segre_multi(const std::vector<int>& shape) {
    CatalogEntry e;
    std::ostringstream nm;
    nm << "segre-multi:";
    for (size_t j = 0; j < shape.size(); ++j) nm << (j ? "," : "") << shape[j];
    e.name = nm.str();
    if (shape.size() < 2) throw error("segre-multi needs at least two factors");
    long total = 1;
    for (int r : shape) {
        if (r < 1) throw error("segre-multi: factors must be at least P^1");
        total *= r + 1;
        if (total > (1 << 14)) throw error("segre-multi: coordinate count exceeds 2^14");
    }
    e.reg = make_registry();
    e.ambient_dim = static_cast<int>(total - 1);
    auto tuples = multi_index_tuples(shape);
    auto tname = [&](const char* side, const std::vector<int>& t) {
        std::ostringstream os;
        os << side << "_{";
        for (size_t j = 0; j < t.size(); ++j) os << (j ? "," : "") << t[j];
        os << "}";
        return os.str();
    };
    std::vector<int> zero(shape.size(), 0);
    e.x_chart = tname("x", zero);
    e.y_chart = tname("y", zero);
    e.reg->declare(e.x_chart);
    for (auto& t : tuples) e.x_vars.push_back(e.reg->declare(tname("x", t)));
    e.reg->declare(e.y_chart);
    for (auto& t : tuples) e.y_vars.push_back(e.reg->declare(tname("y", t)));

    // One parameter per |S| = 1 tuple, in the same order.
    std::vector<VarId> params;
    for (auto& t : tuples)
        if (popcount(tuple_support(t)) == 1) {
            std::ostringstream os;
            os << "t_{";
            for (size_t j = 0; j < t.size(); ++j)
                if (t[j]) os << (j + 1) << "," << t[j];
            os << "}";
            params.push_back(e.reg->declare(os.str()));
        }
    e.param.reg = e.reg;
    e.param.params = params;
    e.param.normal_form = true;
    for (size_t i = 0; i < tuples.size(); ++i) {
        const auto& t = tuples[i];
        Polynomial prod = Polynomial::constant(e.reg, 1);
        for (size_t j = 0; j < t.size(); ++j) {
            if (t[j] == 0) continue;
            std::vector<int> single(t.size(), 0);
            single[j] = t[j];
            prod = prod * var(e.reg, e.reg->id_of(tname("x", single)));
        }
        // Rewrite the product in the parameters through the normal form.
        Bindings to_params;
        size_t pi = 0;
        for (auto& tt : tuples)
            if (popcount(tuple_support(tt)) == 1)
                to_params[e.reg->id_of(tname("x", tt)).index] =
                    RationalFunction::variable(e.reg, params[pi++]);
        e.param.coords.emplace_back(e.x_vars[i], substitute(prod, to_params));
    }
    for (size_t i = 0; i < tuples.size(); ++i)
        if (popcount(tuple_support(tuples[i])) >= 2)
            e.expected_linear_image.push_back(e.y_vars[i]);
    return e;
}

CatalogEntry veronese2(int n) {
    if (n < 1 || n > 6) throw error("veronese2: n must lie in [1, 6]");
    CatalogEntry e;
    e.name = "veronese2:" + std::to_string(n);
    e.reg = make_registry();
    e.x_chart = "x00";
    e.y_chart = "y00";
    e.ambient_dim = (n + 1) * (n + 2) / 2 - 1;
    e.reg->declare(e.x_chart);
    for (int i = 1; i <= n; ++i) e.x_vars.push_back(e.reg->declare("x" + ij(0, i)));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) e.x_vars.push_back(e.reg->declare("x" + ij(i, j)));
    e.reg->declare(e.y_chart);
    for (auto v : e.x_vars)
        e.y_vars.push_back(e.reg->declare("y" + e.reg->name_of(v).substr(1)));
    std::vector<VarId> t = declare_params(e, n);
    e.param.reg = e.reg;
    e.param.params = t;
    e.param.normal_form = true;
    size_t k = 0;
    for (int i = 1; i <= n; ++i)
        e.param.coords.emplace_back(e.x_vars[k++], RationalFunction::variable(e.reg, t[i - 1]));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            e.param.coords.emplace_back(e.x_vars[k++],
                                        RationalFunction(var(e.reg, t[i - 1]) *
                                                         var(e.reg, t[j - 1])));
    auto entry = [&](int i, int j) -> Polynomial {
        if (i > j) std::swap(i, j);
        if (i == 0 && j == 0) return Polynomial::constant(e.reg, 1);
        return var(e.reg, e.reg->id_of("x" + ij(i, j)));
    };
    for (int i1 = 0; i1 <= n; ++i1)
        for (int i2 = i1 + 1; i2 <= n; ++i2)
            for (int j1 = 0; j1 <= n; ++j1)
                for (int j2 = j1 + 1; j2 <= n; ++j2)
                    e.implicit_eqs.push_back(entry(i1, j1) * entry(i2, j2) -
                                             entry(i1, j2) * entry(i2, j1));
    dedupe_up_to_sign(e.implicit_eqs);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            e.expected_linear_image.push_back(e.reg->id_of("y" + ij(i, j)));
    return e;
}

CatalogEntry rnc(int n) {
    if (n < 2 || n > 12) throw error("rnc: n must lie in [2, 12]");
    CatalogEntry e;
    e.name = "rnc:" + std::to_string(n);
    e.reg = make_registry();
    e.x_chart = "x0";
    e.y_chart = "y0";
    e.ambient_dim = n;
    e.reg->declare(e.x_chart);
    for (int i = 1; i <= n; ++i) e.x_vars.push_back(e.reg->declare("x" + std::to_string(i)));
    e.reg->declare(e.y_chart);
    for (int i = 1; i <= n; ++i) e.y_vars.push_back(e.reg->declare("y" + std::to_string(i)));
    std::vector<VarId> t = declare_params(e, 1);
    e.param.reg = e.reg;
    e.param.params = t;
    e.param.normal_form = true;
    for (int i = 1; i <= n; ++i)
        e.param.coords.emplace_back(e.x_vars[i - 1],
                                    RationalFunction(var(e.reg, t[0]).pow(i)));
    // Hankel 2x2 minors on the chart x_0 = 1.
    auto x = [&](int i) {
        return i == 0 ? Polynomial::constant(e.reg, 1) : var(e.reg, e.x_vars[i - 1]);
    };
    for (int j = 0; j + 1 <= n - 1; ++j)
        for (int kk = j + 1; kk <= n - 1; ++kk)
            e.implicit_eqs.push_back(x(j) * x(kk + 1) - x(kk) * x(j + 1));
    dedupe_up_to_sign(e.implicit_eqs);
    for (int i = 2; i <= n; ++i) e.expected_linear_image.push_back(e.y_vars[i - 1]);

    // Quadratic triangular twist whose image straightens the secant into a
    // rank-one Hankel block: y_i = x_i - sum_j c_{ij} x_j x_{i-j} with
    // c_{ij} = 4 C(i-2, j-1) - C(i, j), halved on the square term.
    for (int i = 2; i <= n; ++i) {
        Polynomial corr(e.reg);
        for (int j = 1; 2 * j <= i; ++j) {
            Rational c(4 * binom(i - 2, j - 1) - binom(i, j));
            if (2 * j == i) c /= 2;
            corr += Polynomial::constant(e.reg, c) * x(j) * x(i - j);
        }
        e.lin_g.push_back(RationalFunction(var(e.reg, e.x_vars[0]).pow(i) - corr));
    }
    return e;
}

CatalogEntry grass2(int n) {
    if (n < 4 || n > 8) throw error("grass2: n must lie in [4, 8]");
    CatalogEntry e;
    e.name = "grass2:" + std::to_string(n);
    e.reg = make_registry();
    e.x_chart = "x01";
    e.y_chart = "y01";
    e.ambient_dim = n * (n - 1) / 2 - 1;
    e.reg->declare(e.x_chart);
    for (int j = 2; j < n; ++j) e.x_vars.push_back(e.reg->declare("x" + ij(0, j)));
    for (int j = 2; j < n; ++j) e.x_vars.push_back(e.reg->declare("x" + ij(1, j)));
    for (int i = 2; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.x_vars.push_back(e.reg->declare("x" + ij(i, j)));
    e.reg->declare(e.y_chart);
    for (auto v : e.x_vars)
        e.y_vars.push_back(e.reg->declare("y" + e.reg->name_of(v).substr(1)));
    std::vector<VarId> t = declare_params(e, 2 * (n - 2));  // p_2..p_{n-1}, q_2..q_{n-1}
    auto p = [&](int j) { return var(e.reg, t[j - 2]); };
    auto q = [&](int j) { return var(e.reg, t[n - 2 + j - 2]); };
    e.param.reg = e.reg;
    e.param.params = t;
    e.param.normal_form = true;
    size_t k = 0;
    for (int j = 2; j < n; ++j)
        e.param.coords.emplace_back(e.x_vars[k++], RationalFunction(p(j)));
    for (int j = 2; j < n; ++j)
        e.param.coords.emplace_back(e.x_vars[k++], RationalFunction(q(j)));
    for (int i = 2; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.param.coords.emplace_back(e.x_vars[k++],
                                        RationalFunction(p(i) * q(j) - p(j) * q(i)));
    auto x = [&](int i, int j) -> Polynomial {
        if (i == 0 && j == 1) return Polynomial::constant(e.reg, 1);
        return var(e.reg, e.reg->id_of("x" + ij(i, j)));
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int kk = j + 1; kk < n; ++kk)
                for (int l = kk + 1; l < n; ++l)
                    e.implicit_eqs.push_back(x(i, j) * x(kk, l) - x(i, kk) * x(j, l) +
                                             x(i, l) * x(j, kk));
    dedupe_up_to_sign(e.implicit_eqs);
    for (int i = 2; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.expected_linear_image.push_back(e.reg->id_of("y" + ij(i, j)));
    return e;
}

CatalogEntry tpn(int n) {
    if (n < 2 || n > 4) throw error("tp: n must lie in [2, 4]");
    CatalogEntry e;
    e.name = "tp:" + std::to_string(n);
    e.reg = make_registry();
    e.x_chart = "x00";
    e.y_chart = "y00";
    e.ambient_dim = (n + 1) * (n + 1) - 2;
    e.reg->declare(e.x_chart);
    for (int i = 1; i <= n; ++i) e.x_vars.push_back(e.reg->declare("x" + ij(0, i)));
    for (int i = 1; i < n; ++i) e.x_vars.push_back(e.reg->declare("x" + ij(i, i)));
    for (int i = 1; i <= n; ++i) e.x_vars.push_back(e.reg->declare("x" + ij(i, 0)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) e.x_vars.push_back(e.reg->declare("x" + ij(i, j)));
    e.reg->declare(e.y_chart);
    for (auto v : e.x_vars)
        e.y_vars.push_back(e.reg->declare("y" + e.reg->name_of(v).substr(1)));
    std::vector<VarId> t = declare_params(e, 2 * n - 1);
    auto p = [&](int i) { return var(e.reg, t[i - 1]); };        // x_{0i}
    auto qq = [&](int i) { return var(e.reg, t[n + i - 1]); };   // x_{ii}, i < n
    Polynomial qn = -Polynomial::constant(e.reg, 1);             // x_{nn} = -1 - sum q_i
    for (int i = 1; i < n; ++i) qn -= qq(i);
    auto diag = [&](int i) { return i == n ? qn : qq(i); };

    e.param.reg = e.reg;
    e.param.params = t;
    e.param.normal_form = true;
    size_t k = 0;
    for (int i = 1; i <= n; ++i)
        e.param.coords.emplace_back(e.x_vars[k++], RationalFunction(p(i)));
    for (int i = 1; i < n; ++i)
        e.param.coords.emplace_back(e.x_vars[k++], RationalFunction(qq(i)));
    for (int i = 1; i <= n; ++i)
        e.param.coords.emplace_back(e.x_vars[k++], RationalFunction(diag(i), p(i)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                e.param.coords.emplace_back(e.x_vars[k++],
                                            RationalFunction(diag(i) * p(j), p(i)));

    // Twist data reproducing the classical matrix map: the x_{i0} block is
    // rescaled by -x_{0i}, and the off-diagonal block subtracts x_{i0}x_{0j}
    // instead of its parameter expression.
    auto xv = [&](const std::string& nm) { return var(e.reg, e.reg->id_of(nm)); };
    Polynomial trace_aff = Polynomial::constant(e.reg, 1);
    for (int i = 1; i < n; ++i) trace_aff += xv("x" + ij(i, i));
    for (int i = 1; i <= n; ++i) {
        e.lin_h.push_back(RationalFunction(-xv("x" + ij(0, i))));
        e.lin_g.push_back(RationalFunction(Polynomial(e.reg)));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            e.lin_h.push_back(RationalFunction::constant(e.reg, 1));
            Polynomial diag_x = i == n ? -trace_aff : xv("x" + ij(i, i));
            RationalFunction fx(diag_x * xv("x" + ij(0, j)), xv("x" + ij(0, i)));
            e.lin_g.push_back(fx - RationalFunction(xv("x" + ij(i, 0)) * xv("x" + ij(0, j))));
        }

    auto entry = [&](int i, int j) -> Polynomial {
        if (i == 0 && j == 0) return Polynomial::constant(e.reg, 1);
        if (i == n && j == n) return -trace_aff;
        return xv("x" + ij(i, j));
    };
    for (int i1 = 0; i1 <= n; ++i1)
        for (int i2 = i1 + 1; i2 <= n; ++i2)
            for (int j1 = 0; j1 <= n; ++j1)
                for (int j2 = j1 + 1; j2 <= n; ++j2)
                    e.implicit_eqs.push_back(entry(i1, j1) * entry(i2, j2) -
                                             entry(i1, j2) * entry(i2, j1));
    dedupe_up_to_sign(e.implicit_eqs);
    for (int i = 1; i <= n; ++i) e.expected_linear_image.push_back(e.reg->id_of("y" + ij(i, 0)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) e.expected_linear_image.push_back(e.reg->id_of("y" + ij(i, j)));
    return e;
}

namespace {

// Unsigned minor of a 3x3 matrix of polynomials, deleting row i, column j
// (1-based).
Polynomial minor3(const std::vector<std::vector<Polynomial>>& a, int i, int j) {
    std::vector<std::vector<Polynomial>> sub;
    for (int r = 1; r <= 3; ++r) {
        if (r == i) continue;
        std::vector<Polynomial> row;
        for (int c = 1; c <= 3; ++c)
            if (c != j) row.push_back(a[r - 1][c - 1]);
        sub.push_back(std::move(row));
    }
    return determinant(sub);
}

std::vector<std::vector<Polynomial>> grid3(const RegistryPtr& reg, const std::string& prefix) {
    std::vector<std::vector<Polynomial>> m(3, std::vector<Polynomial>());
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            m[i - 1].push_back(Polynomial::variable(reg, reg->id_of(prefix + ij(i, j))));
    return m;
}

}  // namespace

CatalogEntry g36() {
    CatalogEntry e;
    e.name = "g36";
    e.reg = make_registry();
    e.x_chart = "x0";
    e.y_chart = "z0";
    e.ambient_dim = 19;
    e.reg->declare(e.x_chart);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) e.x_vars.push_back(e.reg->declare("x" + ij(i, j)));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) e.x_vars.push_back(e.reg->declare("y" + ij(i, j)));
    e.x_vars.push_back(e.reg->declare("y0"));
    e.reg->declare(e.y_chart);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) e.y_vars.push_back(e.reg->declare("z" + ij(i, j)));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) e.y_vars.push_back(e.reg->declare("w" + ij(i, j)));
    e.y_vars.push_back(e.reg->declare("w0"));

    std::vector<VarId> t = declare_params(e, 9);  // the 3x3 matrix A, row-major
    std::vector<std::vector<Polynomial>> A(3, std::vector<Polynomial>());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A[i].push_back(var(e.reg, t[3 * i + j]));

    e.param.reg = e.reg;
    e.param.params = t;
    e.param.normal_form = true;
    size_t k = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            e.param.coords.emplace_back(e.x_vars[k++],
                                        RationalFunction::variable(e.reg, t[3 * (i - 1) + j - 1]));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            e.param.coords.emplace_back(e.x_vars[k++], RationalFunction(minor3(A, i, j)));
    e.param.coords.emplace_back(e.x_vars[k++], RationalFunction(determinant(A)));

    for (size_t i = 9; i < e.y_vars.size(); ++i) e.expected_linear_image.push_back(e.y_vars[i]);
    return e;
}

CatalogEntry make_entry(const std::string& name) {
    auto colon = name.find(':');
    std::string family = name.substr(0, colon == std::string::npos ? name.size() : colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::istringstream is(name.substr(colon + 1));
        std::string piece;
        while (std::getline(is, piece, ',')) args.push_back(std::stoi(piece));
    }
    if (family == "segre" && args.size() == 2) return segre(args[0], args[1]);
    if (family == "segre-multi" && args.size() >= 2) return segre_multi(args);
    if (family == "veronese2" && args.size() == 1) return veronese2(args[0]);
    if (family == "rnc" && args.size() == 1) return rnc(args[0]);
    if (family == "grass2" && args.size() == 1) return grass2(args[0]);
    if (family == "tp" && args.size() == 1) return tpn(args[0]);
    if (family == "g36" && args.empty()) return g36();
    throw error("unknown catalog entry '" + name +
                "' (families: " + [] {
                    std::string s;
                    for (auto& f : catalog_families()) s += (s.empty() ? "" : ", ") + f;
                    return s;
                }() + ")");
}

std::vector<std::string> catalog_families() {
    return {"segre:m,n",       "segre-multi:r1,...,rk", "veronese2:n", "rnc:n",
            "grass2:n",        "tp:n",                  "g36"};
}

CremonaPair linearizing_pair(const CatalogEntry& entry) {
    return generalized_triangular(entry.param, entry.x_vars, entry.y_vars, entry.lin_h,
                                  entry.lin_g, entry.x_chart, entry.y_chart);
}

// -------------------------------------------------- secants and tangents

Parametrization secant_parametrization(const CatalogEntry& entry, int k) {
    if (k < 0) throw error("secant_parametrization: k must be nonnegative");
    if (!entry.param.normal_form)
        throw error("secant_parametrization: entry is not in normal form");
    if (k == 0) return entry.param;
    const RegistryPtr& reg = entry.reg;
    size_t n = entry.param.params.size();

    Parametrization out;
    out.reg = reg;
    out.normal_form = false;
    std::vector<Bindings> renames(k + 1);
    for (int b = 0; b <= k; ++b) {
        std::vector<VarId> block;
        for (size_t i = 0; i < n; ++i) {
            std::string nm = reg->name_of(entry.param.params[i]) + "_" + std::to_string(b);
            VarId v = reg->ensure(nm);
            block.push_back(v);
            renames[b][entry.param.params[i].index] = RationalFunction::variable(reg, v);
        }
        out.groups["t" + std::to_string(b)] = block;
        out.params.insert(out.params.end(), block.begin(), block.end());
    }
    std::vector<VarId> s;
    for (int j = 1; j <= k; ++j) s.push_back(reg->ensure("s" + std::to_string(j)));
    out.groups["s"] = s;
    out.params.insert(out.params.end(), s.begin(), s.end());

    RationalFunction s0 = RationalFunction::constant(reg, 1);
    for (VarId v : s) s0 -= RationalFunction::variable(reg, v);
    for (auto& [xv, f] : entry.param.coords) {
        RationalFunction acc = s0 * substitute(f, renames[0]);
        for (int b = 1; b <= k; ++b)
            acc += RationalFunction::variable(reg, s[b - 1]) * substitute(f, renames[b]);
        out.coords.emplace_back(xv, std::move(acc));
    }
    return out;
}

Parametrization tangential_parametrization(const CatalogEntry& entry) {
    if (!entry.param.normal_form)
        throw error("tangential_parametrization: entry is not in normal form");
    const RegistryPtr& reg = entry.reg;
    size_t n = entry.param.params.size();
    std::vector<VarId> s;
    for (size_t i = 1; i <= n; ++i) s.push_back(reg->ensure("s" + std::to_string(i)));

    Parametrization out;
    out.reg = reg;
    out.normal_form = false;
    out.params = entry.param.params;
    out.params.insert(out.params.end(), s.begin(), s.end());
    out.groups["t"] = entry.param.params;
    out.groups["s"] = s;
    for (size_t i = 0; i < entry.param.coords.size(); ++i) {
        auto& [xv, f] = entry.param.coords[i];
        if (i < n) {
            out.coords.emplace_back(
                xv, f + RationalFunction::variable(reg, s[i]));
            continue;
        }
        RationalFunction acc = f;
        for (size_t j = 0; j < n; ++j)
            acc += RationalFunction::variable(reg, s[j]) *
                   f.derivative(entry.param.params[j]);
        out.coords.emplace_back(xv, std::move(acc));
    }
    return out;
}

Parametrization secant_difference_form(const CatalogEntry& entry) {
    Parametrization sec = secant_parametrization(entry, 1);
    const RegistryPtr& reg = entry.reg;
    size_t n = entry.param.params.size();
    std::vector<VarId> u;
    for (size_t i = 1; i <= n; ++i) u.push_back(reg->ensure("u" + std::to_string(i)));
    Bindings b;
    const auto& t0 = sec.groups.at("t0");
    const auto& t1 = sec.groups.at("t1");
    for (size_t i = 0; i < n; ++i) {
        RationalFunction base = RationalFunction::variable(reg, entry.param.params[i]);
        b[t0[i].index] = base;
        b[t1[i].index] = base + RationalFunction::variable(reg, u[i]);
    }
    std::vector<VarId> params = entry.param.params;
    params.insert(params.end(), u.begin(), u.end());
    params.push_back(sec.groups.at("s")[0]);
    std::map<std::string, std::vector<VarId>> groups{{"t", entry.param.params},
                                                     {"u", u},
                                                     {"s", sec.groups.at("s")}};
    return substitute_params(sec, b, std::move(params), std::move(groups));
}

bool membership_check(const Parametrization& param, const Polynomial& eq) {
    Bindings b;
    for (auto& [v, f] : param.coords) b[v.index] = f;
    for (VarId v : eq.vars_used())
        if (!b.count(v.index))
            throw error("membership_check: equation variable '" + eq.registry()->name_of(v) +
                        "' is not a coordinate of the parametrization");
    return substitute(eq, b).is_zero();
}

int secant_defect(const CatalogEntry& entry, int k, const RankSampling& cfg) {
    if (k < 1) throw error("secant_defect: k must be at least 1");
    Parametrization sec = secant_parametrization(entry, k);
    std::vector<RationalFunction> fs;
    for (auto& [v, f] : sec.coords) fs.push_back(f);
    RFMatrix J = jacobian(fs, sec.params);
    int dim = exact_generic_rank(J, sec.params, cfg);
    int n = entry.dim();
    int expected = std::min(entry.ambient_dim, n * (k + 1) + k);
    int defect = expected - dim;
    if (defect < 0) throw error("internal: negative secant defect");
    return defect;
}

bool cone_structure_check(const Parametrization& param, const std::vector<VarId>& vertex_vars,
                          const std::vector<VarId>& translation_params) {
    for (auto& [v, f] : param.coords) {
        if (std::find(vertex_vars.begin(), vertex_vars.end(), v) != vertex_vars.end()) continue;
        for (VarId tv : translation_params)
            if (f.contains_var(tv)) return false;
    }
    return true;
}

bool cone_structure_check(const Parametrization& param, const std::vector<VarId>& vertex_vars) {
    auto it = param.groups.find("t");
    if (it == param.groups.end())
        throw error("cone_structure_check: parametrization has no translation block 't'");
    return cone_structure_check(param, vertex_vars, it->second);
}

Polynomial transform_equation(const CremonaPair& pair, const Polynomial& eq) {
    const RationalMap& inv = pair.inverse;
    Bindings b;
    for (size_t i = 0; i < inv.target_vars.size(); ++i)
        b[inv.target_vars[i].index] = inv.coords[i];
    RationalFunction image = substitute(eq, b);
    Polynomial num = image.num();
    if (num.is_zero()) return num;
    Monomial content = num.monomial_content();
    if (!content.is_one()) {
        Polynomial mono = Polynomial::from_terms(num.registry(), {{content, Rational(1)}});
        num = *num.divided_exactly_by(mono);
    }
    return num * (1 / num.leading_term().coeff);
}

bool equal_up_to_unit(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return p * q.leading_term().coeff == q * p.leading_term().coeff;
}

// ------------------------------------------------- classical equations

Polynomial segre_matrix_determinant(const CatalogEntry& e) {
    if (e.name.rfind("segre:", 0) != 0) throw error("expected a segre entry");
    int m = 0;
    while (e.reg->contains("x" + ij(m + 1, 0))) ++m;
    int n = 0;
    while (e.reg->contains("x" + ij(0, n + 1))) ++n;
    if (m != n) throw error("segre determinant needs a square matrix");
    std::vector<std::vector<Polynomial>> M(m + 1, std::vector<Polynomial>());
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
            M[i].push_back(i == 0 && j == 0 ? Polynomial::constant(e.reg, 1)
                                            : var(e.reg, e.reg->id_of("x" + ij(i, j))));
    return determinant(M);
}

Polynomial tpn_matrix_determinant(const CatalogEntry& e) {
    if (e.name.rfind("tp:", 0) != 0) throw error("expected a tp entry");
    int n = 0;
    while (e.reg->contains("x" + ij(0, n + 1))) ++n;
    Polynomial trace_aff = Polynomial::constant(e.reg, 1);
    for (int i = 1; i < n; ++i) trace_aff += var(e.reg, e.reg->id_of("x" + ij(i, i)));
    std::vector<std::vector<Polynomial>> M(n + 1, std::vector<Polynomial>());
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == 0 && j == 0)
                M[i].push_back(Polynomial::constant(e.reg, 1));
            else if (i == n && j == n)
                M[i].push_back(-trace_aff);
            else
                M[i].push_back(var(e.reg, e.reg->id_of("x" + ij(i, j))));
        }
    return determinant(M);
}

Polynomial grass2_pfaffian_cubic(const CatalogEntry& e) {
    if (e.name.rfind("grass2:", 0) != 0) throw error("expected a grass2 entry");
    int n = 2;
    while (e.reg->contains("x" + ij(0, n))) ++n;
    std::vector<std::vector<Polynomial>> M(n, std::vector<Polynomial>(n, Polynomial(e.reg)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Polynomial x = (i == 0 && j == 1) ? Polynomial::constant(e.reg, 1)
                                              : var(e.reg, e.reg->id_of("x" + ij(i, j)));
            M[i][j] = x;
            M[j][i] = -x;
        }
    return pfaffian(M);
}

std::vector<Polynomial> hankel_minors(const RegistryPtr& reg, const std::vector<VarId>& vars) {
    if (vars.size() < 3) throw error("hankel_minors needs at least three variables");
    size_t cols = vars.size() - 1;
    std::vector<Polynomial> out;
    for (size_t a = 0; a < cols; ++a)
        for (size_t b = a + 1; b < cols; ++b)
            out.push_back(var(reg, vars[a]) * var(reg, vars[b + 1]) -
                          var(reg, vars[b]) * var(reg, vars[a + 1]));
    dedupe_up_to_sign(out);
    return out;
}

Polynomial hyperdeterminant222(const RegistryPtr& reg, const std::vector<VarId>& v) {
    if (v.size() != 7)
        throw error("hyperdeterminant222 expects [v1,v2,v3,v12,v13,v23,v123] on the chart");
    Polynomial v1 = var(reg, v[0]), v2 = var(reg, v[1]), v3 = var(reg, v[2]);
    Polynomial v12 = var(reg, v[3]), v13 = var(reg, v[4]), v23 = var(reg, v[5]);
    Polynomial v123 = var(reg, v[6]);
    Rational two(2), four(4);
    return v123 * v123 + v3 * v3 * v12 * v12 + v2 * v2 * v13 * v13 + v1 * v1 * v23 * v23 -
           two * (v3 * v12 * v123 + v2 * v13 * v123 + v1 * v23 * v123 + v2 * v3 * v12 * v13 +
                  v1 * v3 * v12 * v23 + v1 * v2 * v13 * v23) +
           four * (v12 * v13 * v23 + v1 * v2 * v3 * v123);
}

Polynomial sigma3_triangular_tangent_quartic(const RegistryPtr& reg,
                                             const std::vector<VarId>& v) {
    if (v.size() != 7)
        throw error("sigma3 quartic expects [v1,v2,v3,v12,v13,v23,v123] on the chart");
    Polynomial v1 = var(reg, v[0]), v2 = var(reg, v[1]), v3 = var(reg, v[2]);
    Polynomial v12 = var(reg, v[3]), v13 = var(reg, v[4]), v23 = var(reg, v[5]);
    Polynomial v123 = var(reg, v[6]);
    Rational two(2), four(4);
    return v3 * v3 * v12 * v12 + v2 * v2 * v13 * v13 + v1 * v1 * v23 * v23 +
           two * (v1 * v2 * v13 * v23 + v1 * v3 * v12 * v23 + v2 * v3 * v12 * v13) +
           four * v12 * v13 * v23 - two * v123 * (v1 * v23 + v3 * v12 + v2 * v13) +
           v123 * v123;
}

Polynomial sigma3_cumulant_tangent_quartic(const RegistryPtr& reg,
                                           const std::vector<VarId>& v) {
    if (v.size() != 7)
        throw error("sigma3 quartic expects [v1,v2,v3,v12,v13,v23,v123] on the chart");
    Polynomial v12 = var(reg, v[3]), v13 = var(reg, v[4]), v23 = var(reg, v[5]);
    Polynomial v123 = var(reg, v[6]);
    return v123 * v123 + Rational(4) * v12 * v13 * v23;
}

namespace {

Polynomial g36_quartic_formula(const RegistryPtr& reg,
                               const std::vector<std::vector<Polynomial>>& X,
                               const std::vector<std::vector<Polynomial>>& Y,
                               const Polynomial& y0) {
    Polynomial trXY(reg);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) trXY += X[i][j] * Y[j][i];
    Polynomial first = y0 - trXY;
    Polynomial sum(reg);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) sum += minor3(X, i, j) * minor3(Y, j, i);
    Rational four(4);
    return first * first + four * determinant(Y) + four * y0 * determinant(X) - four * sum;
}

// Y -> D Y^T D with D = diag(1,-1,1): the change between the plain-minor
// and adjugate matrix conventions.
std::vector<std::vector<Polynomial>> adjugate_convention(
    const std::vector<std::vector<Polynomial>>& Y) {
    std::vector<std::vector<Polynomial>> Yc(3, std::vector<Polynomial>());
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Polynomial entry = Y[j - 1][i - 1];
            if ((i + j) % 2 == 1) entry = -entry;
            Yc[i - 1].push_back(std::move(entry));
        }
    return Yc;
}

}  // namespace

Polynomial g36_tangent_quartic(const CatalogEntry& e) {
    if (e.name != "g36") throw error("expected the g36 entry");
    return g36_quartic_formula(e.reg, grid3(e.reg, "x"), adjugate_convention(grid3(e.reg, "y")),
                               var(e.reg, e.reg->id_of("y0")));
}

Polynomial g36_tangent_quartic_classical_form(const CatalogEntry& e) {
    if (e.name != "g36") throw error("expected the g36 entry");
    return g36_quartic_formula(e.reg, grid3(e.reg, "x"), grid3(e.reg, "y"),
                               var(e.reg, e.reg->id_of("y0")));
}

std::pair<CremonaPair, CremonaPair> g36_maps(const CatalogEntry& e) {
    if (e.name != "g36") throw error("expected the g36 entry");
    const RegistryPtr& reg = e.reg;
    CremonaPair cubo = linearizing_pair(e);

    // Quadro-cubic variant: the last coordinate subtracts the first-row
    // cofactor expansion written in the ambient y variables instead of
    // det(X).
    auto X = grid3(reg, "x");
    Polynomial g_w0 = determinant(X);
    for (int i = 1; i <= 3; ++i) {
        Polynomial term = X[0][i - 1] * var(reg, reg->id_of("y" + ij(1, i)));
        g_w0 = (i % 2 == 1) ? g_w0 - term : g_w0 + term;
    }
    std::vector<RationalFunction> g(e.x_vars.size() - 9, RationalFunction(Polynomial(reg)));
    g.back() = RationalFunction(std::move(g_w0));
    CremonaPair quadro = generalized_triangular(e.param, e.x_vars, e.y_vars, {}, g, e.x_chart,
                                                e.y_chart);
    return {std::move(quadro), std::move(cubo)};
}

std::pair<CremonaPair, CremonaPair> g36_maps() { return g36_maps(g36()); }

namespace {

// Reverse-lexicographic tie-break (the convention classical computer algebra
// systems print in): among equal-degree monomials, the one with the smaller
// exponent on the latest-declared differing variable is larger.
bool grevlex_less(const Monomial& a, const Monomial& b) {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    const auto &ea = a.entries(), &eb = b.entries();
    auto ia = ea.rbegin(), ib = eb.rbegin();
    while (ia != ea.rend() && ib != eb.rend()) {
        if (ia->first > ib->first) return true;   // a has the later variable
        if (ia->first < ib->first) return false;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia, ++ib;
    }
    if (ia != ea.rend()) return true;
    return false;
}

}  // namespace

std::pair<G36TangentImage, G36TangentImage> g36_tangential_images() {
    CatalogEntry e = g36();
    Polynomial quartic_chart = g36_tangent_quartic(e);
    Polynomial quartic_classical = g36_tangent_quartic_classical_form(e);
    auto [quadro, cubo] = g36_maps(e);
    auto build = [&](const CremonaPair& pair) {
        G36TangentImage img;
        img.equation = transform_equation(pair, quartic_classical);
        img.image_equation = transform_equation(pair, quartic_chart);
        img.degree = img.equation.total_degree();
        img.term_count = img.equation.terms().size();
        const auto& ts = img.equation.terms();
        size_t best = 0, second = 1;
        for (size_t i = 1; i < ts.size(); ++i)
            if (grevlex_less(ts[best].mono, ts[i].mono)) best = i;
        second = best == 0 ? 1 : 0;
        for (size_t i = 0; i < ts.size(); ++i) {
            if (i == best) continue;
            if (grevlex_less(ts[second].mono, ts[i].mono)) second = i;
        }
        const RegistryPtr& reg = img.equation.registry();
        Polynomial first = Polynomial::from_terms(reg, {ts[best]});
        Polynomial rest = Polynomial::from_terms(reg, {ts[second]});
        std::string tail = to_text(rest);
        img.leading_terms = to_text(first) + (tail[0] == '-' ? " - " + tail.substr(1)
                                                             : " + " + tail);
        img.leading_terms_canonical =
            to_text(Polynomial::from_terms(reg, {ts[0], ts[1]}));
        return img;
    };
    return {build(quadro), build(cubo)};
}

}  // namespace cremona
