#include "cremona/cumulants.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/text_io.hpp"

namespace cremona {

namespace {

long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

std::vector<uint32_t> subset_masks_by_size(int n) {
    std::vector<uint32_t> masks;
    for (uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return masks;
}

}  // namespace

std::string subset_var_name(const std::string& side, uint32_t mask) {
    std::ostringstream os;
    os << side << "_{";
    bool first = true;
    for (int k : mask_elements(mask)) {
        if (!first) os << ",";
        first = false;
        os << k;
    }
    os << "}";
    return os.str();
}

VarId CumulantCoordinates::x_of(uint32_t mask) const {
    return reg->id_of(subset_var_name("x", mask));
}

VarId CumulantCoordinates::y_of(uint32_t mask) const {
    return reg->id_of(subset_var_name("y", mask));
}

CumulantCoordinates make_cumulant_coordinates(int n) {
    if (n < 1 || n > 14) throw error("cumulant coordinates require 1 <= n <= 14");
    CumulantCoordinates cc;
    cc.reg = make_registry();
    cc.n = n;
    cc.masks = subset_masks_by_size(n);
    cc.x_chart = subset_var_name("x", 0);
    cc.y_chart = subset_var_name("y", 0);
    cc.reg->declare(cc.x_chart);
    for (uint32_t m : cc.masks) cc.x.push_back(cc.reg->declare(subset_var_name("x", m)));
    cc.reg->declare(cc.y_chart);
    for (uint32_t m : cc.masks) cc.y.push_back(cc.reg->declare(subset_var_name("y", m)));
    return cc;
}

namespace {

// prod over blocks of pi of vars[block mask], as a monomial term.
Polynomial block_product(const RegistryPtr& reg, const Partition& pi,
                         const std::vector<uint32_t>& masks, const std::vector<VarId>& vars,
                         const Rational& coeff) {
    Polynomial term = Polynomial::constant(reg, coeff);
    for (uint32_t b : pi.blocks) {
        size_t pos = std::lower_bound(masks.begin(), masks.end(), b,
                                      [](uint32_t a, uint32_t c) {
                                          int pa = popcount(a), pc = popcount(c);
                                          if (pa != pc) return pa < pc;
                                          return a < c;
                                      }) -
                     masks.begin();
        term = term * Polynomial::variable(reg, vars[pos]);
    }
    return term;
}

CremonaPair finish_pair(RationalMap fwd, std::optional<RationalMap> inv) {
    CremonaPair pair;
    pair.inverse = inv ? std::move(*inv) : invert_triangular(fwd);
    pair.forward = std::move(fwd);
    pair.verified = is_identity(compose(pair.inverse, pair.forward));
    if (!pair.verified) throw error("cumulant map: inverse composition check failed");
    return pair;
}

}  // namespace

CremonaPair binary_cumulant_map(int n) {
    CumulantCoordinates cc = make_cumulant_coordinates(n);
    const RegistryPtr& reg = cc.reg;
    RationalMap fwd{reg, cc.x, cc.y, {}, cc.x_chart, cc.y_chart};
    RationalMap inv{reg, cc.y, cc.x, {}, cc.y_chart, cc.x_chart};
    for (uint32_t mask : cc.masks) {
        Polynomial yI(reg), xI(reg);
        for (const Partition& pi : all_partitions(mask)) {
            int blocks = static_cast<int>(pi.block_count());
            Rational sign((blocks - 1) % 2 ? -1 : 1);
            yI += block_product(reg, pi, cc.masks, cc.x, sign * factorial(blocks - 1));
            xI += block_product(reg, pi, cc.masks, cc.y, Rational(1));
        }
        fwd.coords.push_back(RationalFunction(std::move(yI)));
        inv.coords.push_back(RationalFunction(std::move(xI)));
    }
    return finish_pair(std::move(fwd), std::move(inv));
}

CremonaPair l_cumulant_map(const PartitionPoset& L) {
    int n = popcount(L.ground());
    if (L.ground() != full_mask(n))
        throw error("l_cumulant_map: the poset must live on the ground set [n]");
    CumulantCoordinates cc = make_cumulant_coordinates(n);
    const RegistryPtr& reg = cc.reg;
    RationalMap fwd{reg, cc.x, cc.y, {}, cc.x_chart, cc.y_chart};
    for (uint32_t mask : cc.masks) {
        PartitionPoset LI = L.restrict(mask);
        Polynomial yI(reg);
        for (size_t i = 0; i < LI.size(); ++i)
            yI += block_product(reg, LI.element(i), cc.masks, cc.x,
                                Rational(static_cast<long>(LI.mobius_to_top(i))));
        fwd.coords.push_back(RationalFunction(std::move(yI)));
    }
    return finish_pair(std::move(fwd), std::nullopt);
}

uint32_t tuple_support(const std::vector<int>& t) {
    uint32_t m = 0;
    for (size_t j = 0; j < t.size(); ++j)
        if (t[j] != 0) m |= 1u << j;
    return m;
}

std::vector<std::vector<int>> multi_index_tuples(const std::vector<int>& shape) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur(shape.size(), 0);
    for (;;) {
        all.push_back(cur);
        size_t j = 0;
        while (j < shape.size() && cur[j] == shape[j]) cur[j++] = 0;
        if (j == shape.size()) break;
        ++cur[j];
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        uint32_t ma = tuple_support(a), mb = tuple_support(b);
        if (popcount(ma) != popcount(mb)) return popcount(ma) < popcount(mb);
        if (ma != mb) return ma < mb;  // subset order, matching the cumulant masks
        return a < b;
    });
    all.erase(all.begin());  // drop the zero tuple (the chart)
    return all;
}

namespace {

std::string tuple_var_name(const std::string& side, const std::vector<int>& t) {
    std::ostringstream os;
    os << side << "_{";
    for (size_t j = 0; j < t.size(); ++j) {
        if (j) os << ",";
        os << t[j];
    }
    os << "}";
    return os.str();
}

}  // namespace

MultiIndexCoordinates make_multi_index_coordinates(const std::vector<int>& shape) {
    if (shape.size() < 2) throw error("multi-Segre coordinates require at least two factors");
    long total = 1;
    for (int r : shape) {
        if (r < 1) throw error("multi-Segre coordinates require every r_j >= 1");
        total *= r + 1;
        if (total > (1 << 14)) throw error("multi-Segre coordinate count exceeds 2^14");
    }
    MultiIndexCoordinates mc;
    mc.reg = make_registry();
    mc.shape = shape;
    mc.tuples = multi_index_tuples(shape);
    std::vector<int> zero(shape.size(), 0);
    mc.x_chart = tuple_var_name("x", zero);
    mc.y_chart = tuple_var_name("y", zero);
    mc.reg->declare(mc.x_chart);
    for (auto& t : mc.tuples) mc.x.push_back(mc.reg->declare(tuple_var_name("x", t)));
    mc.reg->declare(mc.y_chart);
    for (auto& t : mc.tuples) mc.y.push_back(mc.reg->declare(tuple_var_name("y", t)));
    return mc;
}

CremonaPair multi_segre_cumulant_map(const std::vector<int>& shape) {
    MultiIndexCoordinates mc = make_multi_index_coordinates(shape);
    const RegistryPtr& reg = mc.reg;
    auto var_of = [&](const std::vector<int>& t) {
        return reg->id_of(tuple_var_name("x", t));
    };
    RationalMap fwd{reg, mc.x, mc.y, {}, mc.x_chart, mc.y_chart};
    for (size_t i = 0; i < mc.tuples.size(); ++i) {
        const std::vector<int>& t = mc.tuples[i];
        uint32_t s = tuple_support(t);
        Polynomial yI(reg);
        for (const Partition& pi : all_partitions(s)) {
            int blocks = static_cast<int>(pi.block_count());
            Rational c(((blocks - 1) % 2 ? -1 : 1) * factorial(blocks - 1));
            Polynomial term = Polynomial::constant(reg, c);
            for (uint32_t b : pi.blocks) {
                std::vector<int> tb(t.size(), 0);
                for (size_t j = 0; j < t.size(); ++j)
                    if (b & (1u << j)) tb[j] = t[j];
                term = term * Polynomial::variable(reg, var_of(tb));
            }
            yI += term;
        }
        fwd.coords.push_back(RationalFunction(std::move(yI)));
    }
    return finish_pair(std::move(fwd), std::nullopt);
}

bool linearization_check(const CremonaPair& pair, int n) {
    const RegistryPtr& reg = pair.forward.reg;
    std::vector<uint32_t> masks = subset_masks_by_size(n);
    if (pair.forward.source_vars.size() != masks.size())
        throw error("linearization_check: map is not over cumulant coordinates for this n");
    std::vector<VarId> t;
    for (int i = 1; i <= n; ++i) t.push_back(reg->ensure("t_" + std::to_string(i)));
    Bindings segre;
    for (size_t i = 0; i < masks.size(); ++i) {
        Polynomial prod = Polynomial::constant(reg, 1);
        for (int k : mask_elements(masks[i])) prod = prod * Polynomial::variable(reg, t[k - 1]);
        segre[pair.forward.source_vars[i].index] = RationalFunction(std::move(prod));
    }
    for (size_t i = 0; i < masks.size(); ++i) {
        if (popcount(masks[i]) < 2) continue;
        if (!substitute(pair.forward.coords[i], segre).is_zero()) return false;
    }
    return true;
}

bool multi_segre_linearization_check(const CremonaPair& pair, const std::vector<int>& shape) {
    const RegistryPtr& reg = pair.forward.reg;
    Bindings segre;
    size_t idx = 0;
    // Parameters a_{j,c}: the affine chart fixes a_{j,0} = 1.
    std::vector<std::vector<VarId>> a(shape.size());
    for (size_t j = 0; j < shape.size(); ++j)
        for (int c = 1; c <= shape[j]; ++c)
            a[j].push_back(reg->ensure("a_{" + std::to_string(j + 1) + "," + std::to_string(c) +
                                       "}"));
    // Rebuild the tuple list in the map's coordinate order.
    MultiIndexCoordinates mc = make_multi_index_coordinates(shape);
    if (mc.tuples.size() != pair.forward.source_vars.size())
        throw error("multi_segre_linearization_check: shape does not match the map");
    for (auto& t : mc.tuples) {
        Polynomial prod = Polynomial::constant(reg, 1);
        for (size_t j = 0; j < t.size(); ++j)
            if (t[j] != 0) prod = prod * Polynomial::variable(reg, a[j][t[j] - 1]);
        segre[pair.forward.source_vars[idx++].index] = RationalFunction(std::move(prod));
    }
    for (size_t i = 0; i < mc.tuples.size(); ++i) {
        if (popcount(tuple_support(mc.tuples[i])) < 2) continue;
        if (!substitute(pair.forward.coords[i], segre).is_zero()) return false;
    }
    return true;
}

SecantCumulantResult secant_cumulant_pipeline(int n) {
    if (n < 2) throw error("secant cumulant pipeline requires n >= 2");
    CumulantCoordinates cc = make_cumulant_coordinates(n);
    const RegistryPtr& reg = cc.reg;

    // Third block of coordinates for the image of the second map.
    std::vector<VarId> z;
    reg->declare(subset_var_name("z", 0));
    for (uint32_t m : cc.masks) z.push_back(reg->declare(subset_var_name("z", m)));

    // psi1: one-cluster cumulants from the explicit subset sum. Singletons
    // stay fixed; the empty set is the chart.
    RationalMap psi1{reg, cc.x, cc.y, {}, cc.x_chart, cc.y_chart};
    auto x_of = [&](uint32_t m) { return Polynomial::variable(reg, cc.x_of(m)); };
    for (uint32_t mask : cc.masks) {
        if (popcount(mask) == 1) {
            psi1.coords.push_back(RationalFunction(x_of(mask)));
            continue;
        }
        Polynomial yI(reg);
        for (uint32_t A = mask;; A = (A - 1) & mask) {
            Polynomial term =
                A ? x_of(A) : Polynomial::constant(reg, 1);
            for (int k : mask_elements(mask & ~A)) term = term * x_of(1u << (k - 1));
            int odd = popcount(mask & ~A) % 2;
            yI += odd ? -term : term;
            if (A == 0) break;
        }
        psi1.coords.push_back(RationalFunction(std::move(yI)));
    }

    // Cross-check against the poset route for small n.
    if (n <= 4) {
        CremonaPair via_poset = l_cumulant_map(one_cluster_partitions(n));
        for (size_t i = 0; i < psi1.coords.size(); ++i) {
            if (to_text(psi1.coords[i]) != to_text(via_poset.forward.coords[i]))
                throw error("secant pipeline: subset-sum and one-cluster poset routes differ "
                            "at coordinate " + std::to_string(i));
        }
    }

    // psi2: the interval transform z_I = sum (-1)^(|pi|-1) prod y_B. Blocks
    // of size one would contribute the raw means; the identity below needs
    // the centered convention, under which those terms vanish, so the sum
    // runs over interval partitions with every block of size >= 2 and the
    // singleton coordinates pass through.
    PartitionPoset interval = interval_partitions(n);
    RationalMap psi2{reg, cc.y, z, {}, cc.y_chart, subset_var_name("z", 0)};
    for (size_t m = 0; m < cc.masks.size(); ++m) {
        uint32_t mask = cc.masks[m];
        if (popcount(mask) == 1) {
            psi2.coords.push_back(RationalFunction::variable(reg, cc.y[m]));
            continue;
        }
        PartitionPoset LI = interval.restrict(mask);
        Polynomial zI(reg);
        for (size_t i = 0; i < LI.size(); ++i) {
            const Partition& pi = LI.element(i);
            bool big_blocks = true;
            for (uint32_t b : pi.blocks) big_blocks = big_blocks && popcount(b) >= 2;
            if (!big_blocks) continue;
            int blocks = static_cast<int>(pi.block_count());
            zI += block_product(reg, pi, cc.masks, cc.y,
                                Rational((blocks - 1) % 2 ? -1 : 1));
        }
        psi2.coords.push_back(RationalFunction(std::move(zI)));
    }

    // Secant parametrization x_I = (1-s) prod a_i + s prod b_i on the chart.
    std::vector<VarId> a, b;
    for (int i = 1; i <= n; ++i) {
        a.push_back(reg->declare("a_{" + std::to_string(i) + ",1}"));
        b.push_back(reg->declare("b_{" + std::to_string(i) + ",1}"));
    }
    VarId s = reg->declare("s_1");
    Polynomial sp = Polynomial::variable(reg, s);
    Polynomial one = Polynomial::constant(reg, 1);
    Parametrization secant;
    secant.reg = reg;
    for (int i = 1; i <= n; ++i) {
        secant.params.push_back(a[i - 1]);
        secant.params.push_back(b[i - 1]);
    }
    secant.params.push_back(s);
    secant.groups["a"] = a;
    secant.groups["b"] = b;
    secant.groups["s"] = {s};
    for (size_t i = 0; i < cc.masks.size(); ++i) {
        Polynomial pa = one, pb = one;
        for (int k : mask_elements(cc.masks[i])) {
            pa = pa * Polynomial::variable(reg, a[k - 1]);
            pb = pb * Polynomial::variable(reg, b[k - 1]);
        }
        secant.coords.emplace_back(cc.x[i], RationalFunction((one - sp) * pa + sp * pb));
    }

    SecantCumulantResult out;
    out.composite = compose(psi2, psi1);
    out.image = apply_to_parametrization(psi2, apply_to_parametrization(psi1, secant));
    out.identity_verified = true;

    // Closed form: z_I = s(1-s)(1-2s)^{|I|-2} prod (b_i - a_i) for |I| >= 2.
    for (size_t i = 0; i < cc.masks.size(); ++i) {
        int size = popcount(cc.masks[i]);
        if (size < 2) continue;
        Polynomial expect = sp * (one - sp) * (one - sp * 2).pow(size - 2);
        for (int k : mask_elements(cc.masks[i]))
            expect = expect * (Polynomial::variable(reg, b[k - 1]) -
                               Polynomial::variable(reg, a[k - 1]));
        bool ok = out.image.coords[i].second == RationalFunction(expect);
        out.identity_verified = out.identity_verified && ok;
        out.checked.push_back(subset_var_name("z", cc.masks[i]) + (ok ? ": ok" : ": MISMATCH"));
    }
    return out;
}

}  // namespace cremona
