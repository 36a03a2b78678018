#include "rectify/rectifier.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace rectify {

// ---------------------------------------------------------------------------
// Bound ledger.

BoundLedger bound_sequence(const Int& k, const Int& t, int n) {
    if (k < 2 || t < 2) throw std::invalid_argument("bound_sequence: requires k, t >= 2");
    if (n < 0 || n > 24) throw std::invalid_argument("bound_sequence: requires 0 <= n <= 24");
    BoundLedger led{k, t, {k}, {t}};
    for (int i = 1; i <= n; ++i) {
        const Int vp = led.v[i - 1];  // copy: push_back below may reallocate
        Int v = 2 * vp * vp;
        // Closed form cross-check: v_i = 2^(2^i - 1) * t^(2^i).
        unsigned long e = 1ul << i;
        if (v != pow_int(Int(2), e - 1) * pow_int(t, e))
            throw std::logic_error("bound_sequence: closed form mismatch");
        led.v.push_back(std::move(v));
        // u_i grows doubly exponentially and stops being representable very
        // quickly (u_6 already needs ~2^95 bits); the list is extended only
        // while the value physically fits.
        if (led.u.size() == static_cast<std::size_t>(i) && mpz_fits_ulong_p(vp.get_mpz_t())) {
            unsigned long vexp = vp.get_ui();
            const Int& up = led.u[i - 1];
            double est_bits = 2.0 * static_cast<double>(vexp) * static_cast<double>(bit_length(up)) +
                              static_cast<double>(vexp) * static_cast<double>(bit_length(vp));
            if (est_bits < 3e8)
                led.u.push_back(pow_int(up, 2 * vexp) * pow_int(vp, vexp));
        }
    }
    return led;
}

GuaranteeGate guarantee_gate(int n, const Int& k, const Int& t, const Int& p) {
    // guaranteed: n < log2 log_(2t) log_(2kt) p - 1, unwound into the exact
    // comparison p > (2kt)^((2t)^(2^(n+1))).
    GuaranteeGate g{};
    if (n + 1 <= 20) {
        Int outer_exp = pow_int(2 * t, 1ul << (n + 1));
        g.guaranteed = !leq_pow(p, 2 * k * t, outer_exp);
    } else {
        g.guaranteed = false;  // would require p beyond 2^(2^21) bits
    }
    BoundLedger led = bound_sequence(k, t, n);
    // When u_n is too large to materialize it certainly exceeds any
    // representable p, so the exact condition fails.
    g.exact_ok = led.u.size() > static_cast<std::size_t>(n) && led.u[n] < p;
    return g;
}

// ---------------------------------------------------------------------------
// Helpers.

namespace {

Int sigma_eval(const IntPoly& f, const std::vector<Int>& A, const FpDomain& fp) {
    return f.evaluate(A, fp);
}

/// Divides out the prime-to-p part of the integer content and canonicalizes
/// the sign.  Factors of p must stay: dividing them out would change the
/// residue image of the relation and silently break the anchoring invariant.
IntPoly content_normalize(const IntPoly& f, const Int& p) {
    if (f.is_zero()) return f;
    Int g = 0;
    for (const auto& [m, c] : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    Int d;
    mpz_remove(d.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t());
    IntPoly out(f.nvars());
    for (const auto& [m, c] : f.terms()) out.add_term(m, div_exact(c, d));
    return out.sign_canonical();
}

/// Splits a polynomial in base + tail variables by its tail monomials; values
/// are polynomials in the base ring.
std::map<Monomial, IntPoly> split_by_tail(const IntPoly& f, int base) {
    std::map<Monomial, IntPoly> out;
    const int total = f.nvars();
    for (const auto& [m, c] : f.terms()) {
        Monomial tail(m.begin() + base, m.end());
        Monomial head(m.begin(), m.begin() + base);
        auto [it, fresh] = out.try_emplace(tail, IntPoly::zero(base));
        (void)fresh;
        it->second.add_term(head, c);
    }
    (void)total;
    return out;
}

/// Shrinks a relation collection without changing its common zero set: after
/// content normalization and deduplication, a member is dropped when it is a
/// polynomial multiple of a kept member or a Q-linear combination of kept
/// members (either way it vanishes wherever the kept ones do).  Kept members
/// are chosen greedily, simplest first, which keeps the later resultant
/// aggregation small.
std::vector<IntPoly> prune(std::vector<IntPoly> polys, const Int& p) {
    std::set<IntPoly> uniq;
    for (auto& f : polys)
        if (!f.is_zero()) uniq.insert(content_normalize(f, p));
    std::vector<IntPoly> cands(uniq.begin(), uniq.end());
    std::sort(cands.begin(), cands.end(), [](const IntPoly& a, const IntPoly& b) {
        long da = a.degree().value(), db = b.degree().value();
        if (da != db) return da < db;
        if (a.nterms() != b.nterms()) return a.nterms() < b.nterms();
        Int na = a.l1_norm(), nb = b.l1_norm();
        if (na != nb) return na < nb;
        return a < b;
    });

    using Row = std::map<Monomial, Rat, GrlexGreater>;
    std::map<Monomial, Row, GrlexGreater> basis;  // keyed by leading monomial
    std::vector<IntPoly> kept;
    for (const auto& f : cands) {
        bool redundant = false;
        IntPoly q(f.nvars());
        for (const auto& g : kept) {
            if (try_exact_div(f, g, q)) {
                redundant = true;
                break;
            }
        }
        if (redundant) continue;
        Row row;
        for (const auto& [m, c] : f.terms()) row.emplace(m, Rat(c));
        while (!row.empty()) {
            auto it = basis.find(row.begin()->first);
            if (it == basis.end()) break;
            Rat scale = row.begin()->second / it->second.begin()->second;
            for (const auto& [m, c] : it->second) {
                auto [rit, fresh] = row.try_emplace(m, 0);
                (void)fresh;
                rit->second -= scale * c;
                if (rit->second == 0) row.erase(rit);
            }
        }
        if (row.empty()) continue;  // linear combination of kept members
        basis.emplace(row.begin()->first, std::move(row));
        kept.push_back(f);
    }
    return kept;
}

struct SigmaPair {
    DomainPoly<PolyModDomain> f1, f2;  // images over F_p[y...], in the pivot variable
};

SigmaPair sigma_images(const MultiResultant& mr, int var, const std::vector<Int>& A,
                       const Int& p) {
    const int total = mr.base_nvars + mr.y_count;
    PolyModDomain pm(total, p);
    std::vector<IntPoly> point;
    point.reserve(total);
    for (int j = 0; j < mr.base_nvars; ++j)
        point.push_back(IntPoly::constant(mod_reduce(A[j], p), total));
    for (int j = 0; j < mr.y_count; ++j)
        point.push_back(IntPoly::variable(mr.base_nvars + j, total));
    auto image = [&](const IntPoly& f) {
        std::vector<IntPoly> c(f.degree_in(var) + 1, pm.zero());
        for (long e = 0; e <= f.degree_in(var); ++e)
            c[e] = f.coefficient_poly(var, static_cast<unsigned>(e)).evaluate(point, pm);
        return dp_from(pm, std::move(c));
    };
    return {image(mr.f1), image(mr.f2)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Forward elimination.

EliminationChain eliminate_forward(const std::vector<IntPoly>& L1, const std::vector<Int>& A,
                                   const Int& p, const BoundProfile& profile, bool force) {
    const int n = static_cast<int>(A.size());
    FpDomain fp(p);
    EliminationChain chain;
    chain.p = p;
    chain.anchors.reserve(n);
    for (const auto& a : A) chain.anchors.push_back(mod_reduce(a, p));
    chain.ledger = bound_sequence(profile.k, profile.t, n);
    chain.n = n;

    for (const auto& f : L1) {
        if (f.nvars() != n) throw std::invalid_argument("eliminate_forward: variable count mismatch");
        if (!f.is_bounded(profile))
            throw std::invalid_argument("eliminate_forward: input relation exceeds the (k,t) profile");
        if (sigma_eval(f, chain.anchors, fp) != 0)
            throw std::invalid_argument("eliminate_forward: input relation does not vanish at A");
    }

    auto handle_constant = [&](const IntPoly& f, int level) {
        std::ostringstream os;
        os << "elimination found the non-zero constant " << f.constant_term().get_str()
           << " at level " << level << " with residue 0 mod " << p.get_str()
           << "; the exact bound cannot certify it as zero";
        if (!force) throw BoundAbortError(os.str());
        chain.forced_drop = true;
    };

    std::vector<IntPoly> L = prune(L1, p);
    chain.r = n;
    for (int i = 0; i < n; ++i) {
        if (L.empty() || (L.size() == 1 && L.front().is_zero())) {
            chain.r = i;
            break;
        }
        const bool u_known = chain.ledger.u.size() > static_cast<std::size_t>(i);
        chain.exact_ok_held = chain.exact_ok_held && u_known && chain.ledger.u[i] < p;
        const bool next_known = chain.ledger.u.size() > static_cast<std::size_t>(i + 1);
        const BoundProfile next{next_known ? chain.ledger.u[i + 1] : Int(0),
                                chain.ledger.v[i + 1]};
        const int var = i;
        EliminationLevel level;
        level.L = L;

        // Stage A: truncate each member at its residual degree in x_(i+1);
        // dropped coefficients descend to the next level.
        std::vector<IntPoly> pushes;
        // Truncation: keeps the part of f up to the degree surviving the
        // residue map, pushing the dropped coefficients.  Returns the zero
        // polynomial when the entire residue image dies.
        auto truncate = [&](const IntPoly& f) {
            long dtop = f.degree_in(var);
            long d = -1;
            for (long e = dtop; e >= 0; --e) {
                if (sigma_eval(f.coefficient_poly(var, static_cast<unsigned>(e)), chain.anchors,
                               fp) != 0) {
                    d = e;
                    break;
                }
            }
            for (long e = dtop; e > d; --e) {
                IntPoly c = f.coefficient_poly(var, static_cast<unsigned>(e));
                if (!c.is_zero()) pushes.push_back(c);
            }
            IntPoly trunc(n);
            if (d < 0) return trunc;  // the whole member descends
            if (d == 0)
                throw std::logic_error(
                    "eliminate_forward: residual constant term contradicts vanishing at A");
            for (long e = 0; e <= d; ++e) {
                IntPoly xp = IntPoly::variable(var, n).pow(static_cast<unsigned>(e));
                trunc += f.coefficient_poly(var, static_cast<unsigned>(e)) * xp;
            }
            return trunc;
        };

        std::vector<std::pair<IntPoly, long>> truncated;  // (f_j', sigma-degree)
        std::vector<int> sources;
        for (std::size_t j = 0; j < L.size(); ++j) {
            const IntPoly& f = L[j];
            if (f.is_constant()) {
                if (!f.is_zero()) handle_constant(f, i);
                continue;
            }
            IntPoly trunc = truncate(f);
            if (trunc.is_zero()) continue;
            truncated.emplace_back(std::move(trunc), 0l);
            truncated.back().second = truncated.back().first.degree_in(var);
            sources.push_back(static_cast<int>(j));
        }

        // Pre-reduction: the later aggregation needs a Sylvester determinant
        // over a ring with one fresh variable per extra member, which is only
        // tractable for a handful of small-degree members.  Pseudo-remainders
        // by the minimal-degree member shrink the set without changing its
        // common zero set (leading coefficients have non-zero residues, hence
        // stay invertible at any anchored lift), and x-free remainders are
        // exactly the eliminated consequences, pushed down directly.
        {
            PolyDomain pd(n);
            auto as_dompoly = [&](const IntPoly& f) {
                std::vector<IntPoly> c(f.degree_in(var) + 1, pd.zero());
                for (long e = 0; e <= f.degree_in(var); ++e)
                    c[e] = f.coefficient_poly(var, static_cast<unsigned>(e));
                return dp_from(pd, std::move(c));
            };
            // The Sylvester matrix of the aggregation has order dmin + dmax;
            // Bareiss over multivariate entries is only tractable when that
            // stays small.  (Extra members only add one linear variable each,
            // which the sparse representation absorbs.)
            auto feasible = [&]() {
                if (truncated.size() <= 1) return true;
                long dmin = truncated[0].second, dmax = 0;
                for (auto& [f, d] : truncated) {
                    dmin = std::min(dmin, d);
                    dmax = std::max(dmax, d);
                }
                return dmin + dmax <= 8;
            };
            while (!feasible()) {
                std::size_t piv = 0;
                for (std::size_t j = 1; j < truncated.size(); ++j) {
                    if (truncated[j].second < truncated[piv].second ||
                        (truncated[j].second == truncated[piv].second &&
                         truncated[j].first.nterms() < truncated[piv].first.nterms()))
                        piv = j;
                }
                auto pivot_dp = as_dompoly(truncated[piv].first);
                std::vector<std::pair<IntPoly, long>> next_active{truncated[piv]};
                std::vector<int> next_sources{sources[piv]};
                for (std::size_t j = 0; j < truncated.size(); ++j) {
                    if (j == piv) continue;
                    auto rem = dp_pseudo_divmod(pd, as_dompoly(truncated[j].first), pivot_dp).second;
                    IntPoly r(n);
                    for (long e = 0; e <= rem.deg(); ++e)
                        r += rem.coeffs[e] * IntPoly::variable(var, n).pow(static_cast<unsigned>(e));
                    r = content_normalize(r, p);
                    if (r.is_zero()) continue;
                    if (r.degree_in(var) == 0) {
                        pushes.push_back(r);  // x-free consequence
                        continue;
                    }
                    IntPoly trunc = truncate(r);
                    if (trunc.is_zero()) continue;
                    next_active.emplace_back(trunc, trunc.degree_in(var));
                    next_sources.push_back(-1);  // derived, not an input member
                }
                truncated = std::move(next_active);
                sources = std::move(next_sources);
            }
        }

        if (std::getenv("RECTIFY_TRACE")) {
            std::size_t terms = 0;
            long dmax = 0;
            for (auto& [f, d] : truncated) {
                terms += f.nterms();
                dmax = std::max(dmax, d);
            }
            std::fprintf(stderr, "[trace] level %d: |L|=%zu active=%zu dmax=%ld terms=%zu\n", i,
                         L.size(), truncated.size(), dmax, terms);
        }
        if (!truncated.empty()) {
            // Pivot: minimal sigma-degree in x_(i+1), ties by input order.
            std::size_t piv = 0;
            for (std::size_t j = 1; j < truncated.size(); ++j)
                if (truncated[j].second < truncated[piv].second) piv = j;
            level.pivot = sources[piv];
            std::vector<IntPoly> fs;
            fs.push_back(truncated[piv].first);
            std::set<IntPoly> seen{truncated[piv].first};
            for (std::size_t j = 0; j < truncated.size(); ++j)
                if (j != piv && seen.insert(truncated[j].first).second)
                    fs.push_back(truncated[j].first);
            level.A_mod = fs;

            // Stage B: every y-monomial coefficient of the aggregated resultant.
            MultiResultant mr = multi_resultant(fs, var);
            level.y_count = mr.y_count;
            for (auto& [tail, coeff] : split_by_tail(mr.value, n))
                if (!coeff.is_zero()) pushes.push_back(coeff);

            // delta := minimal j with sigma_i(s_jj) != 0, over the residue
            // images (stage A preserved the degrees, so specialization
            // commutes with the subresultant determinants).
            const int total = mr.base_nvars + mr.y_count;
            PolyModDomain pm(total, p);
            auto [sf1, sf2] = sigma_images(mr, var, chain.anchors, p);
            long top = sf2.is_zero() ? sf1.deg() : std::min(sf1.deg(), sf2.deg());
            long delta = -1;
            for (long j = 0; j <= top; ++j) {
                auto S = subresultant(pm, sf1, sf2, j);
                if (!pm.is_zero(S.coeff(pm, j))) {
                    delta = j;
                    break;
                }
            }
            if (delta < 0)
                throw std::logic_error("eliminate_forward: no non-zero principal subresultant");
            level.delta = delta;

            // Stage C: the coefficients of s_jj for 1 <= j < delta.
            if (delta > 1) {
                PolyDomain pd(total);
                auto as_dompoly = [&](const IntPoly& f) {
                    std::vector<IntPoly> c(f.degree_in(var) + 1, pd.zero());
                    for (long e = 0; e <= f.degree_in(var); ++e)
                        c[e] = f.coefficient_poly(var, static_cast<unsigned>(e));
                    return dp_from(pd, std::move(c));
                };
                auto P1 = as_dompoly(mr.f1);
                auto P2n = mr.f2.is_zero() ? P1 : as_dompoly(mr.f2);
                for (long j = 1; j < delta; ++j) {
                    IntPoly sjj = subresultant_coeff(pd, P1, P2n, j, j);
                    for (auto& [tail, coeff] : split_by_tail(sjj, n))
                        if (!coeff.is_zero()) pushes.push_back(coeff);
                }
            }
        }

        // Constants produced by the pushes are decided now; everything else is
        // checked against the ledger and the residue map.
        std::vector<IntPoly> kept;
        for (auto& f : pushes) {
            if (f.is_constant()) {
                if (!f.is_zero()) {
                    if (sigma_eval(f, chain.anchors, fp) != 0)
                        throw std::logic_error("eliminate_forward: pushed constant has non-zero residue");
                    handle_constant(f, i);
                }
                continue;
            }
            if (sigma_eval(f, chain.anchors, fp) != 0)
                throw std::logic_error("eliminate_forward: pushed relation does not vanish at A");
            if (next_known && !f.is_bounded(next))
                throw std::logic_error("eliminate_forward: pushed relation exceeds the ledger bound");
            kept.push_back(std::move(f));
        }
        std::vector<IntPoly> nextL = prune(std::move(kept), p);
        if (nextL.empty()) nextL.push_back(IntPoly::zero(n));  // (L^i nonempty here)

        chain.levels.push_back(std::move(level));
        L = std::move(nextL);
    }

    // Any surviving member at the stop level must be the zero polynomial (at
    // level n all variables are eliminated, so members are constants).
    if (chain.r == n) {
        for (const auto& f : L) {
            if (f.is_zero()) continue;
            if (!f.is_constant())
                throw std::logic_error("eliminate_forward: non-constant survivor after full elimination");
            handle_constant(f, n);
        }
        L.clear();
        L.push_back(IntPoly::zero(n));
    }
    EliminationLevel last;
    last.L = L;
    chain.levels.push_back(std::move(last));
    return chain;
}

// ---------------------------------------------------------------------------
// Backward substitution.

TowerElem select_compatible_root(Tower& tower, const TowerPoly& G, const Int& a) {
    TowerDomain K(tower);
    if (G.deg() < 1) throw std::invalid_argument("select_compatible_root: deg(G) must be >= 1");
    auto factors = factor_univariate(K, G);
    const FpDomain fp(tower.prime());
    const Int ar = mod_reduce(a, tower.prime());

    const TowerPoly* best = nullptr;
    std::string best_key;
    for (const auto& [g, mult] : factors) {
        (void)mult;
        bool vanishes;
        try {
            vanishes = dp_eval(fp, sigma_poly(tower, g), ar) == 0;
        } catch (const std::domain_error&) {
            continue;  // a denominator outside Z_(p): this factor cannot anchor
        }
        if (!vanishes) continue;
        std::string key;
        for (const auto& c : g.coeffs) key += tower_elem_to_string(c) + "|";
        if (!best || g.deg() < best->deg() || (g.deg() == best->deg() && key < best_key)) {
            best = &g;
            best_key = key;
        }
    }
    if (!best) {
        std::ostringstream os;
        os << "select_compatible_root: no irreducible factor's residue image vanishes at "
           << ar.get_str() << " (mod " << tower.prime().get_str() << "); G has degree " << G.deg()
           << " and " << factors.size() << " factors over\n"
           << tower.describe();
        throw std::logic_error(os.str());
    }
    if (best->deg() == 1) {
        TowerElem b = K.neg(K.exact_div(best->coeffs[0], best->coeffs[1]));
        if (tower.apply_anchor(b) != ar)
            throw std::logic_error("select_compatible_root: linear root has a mismatched anchor");
        return b;
    }
    TowerPoly g = dp_monic(K, *best);
    tower.adjoin(g.coeffs, ar);
    return tower.generator(tower.levels());
}

RectifiedSet back_substitute(const EliminationChain& chain) {
    const int n = chain.n;
    RectifiedSet rs{Tower(chain.p)};
    rs.chain = chain;
    Tower& tower = rs.tower;
    std::vector<TowerElem> b(n);

    // Above the stop level there are no constraints: integer lifts.
    for (int j = chain.r; j < n; ++j) b[j] = tower.from_rat(Rat(chain.anchors[j]));

    for (int i = chain.r - 1; i >= 0; --i) {
        const EliminationLevel& level = chain.levels[i];
        TowerDomain K(tower);
        auto point = [&]() {
            std::vector<TowerElem> pt(n, K.zero());
            for (int j = i + 1; j < n; ++j) pt[j] = tower.lift(b[j]);
            return pt;
        };
        auto specialize = [&](const IntPoly& f) {
            auto pt = point();
            std::vector<TowerElem> c(f.degree_in(i) + 1, K.zero());
            for (long e = 0; e <= f.degree_in(i); ++e)
                c[e] = f.coefficient_poly(i, static_cast<unsigned>(e)).evaluate(pt, K);
            return dp_from(K, std::move(c));
        };

        if (level.A_mod.empty()) {
            b[i] = tower.from_rat(Rat(chain.anchors[i]));
        } else {
            TowerPoly G;
            for (const auto& f : level.A_mod) {
                TowerPoly s = specialize(f);
                if (s.is_zero()) continue;
                if (s.deg() == 0)
                    throw std::logic_error(
                        "back_substitute: a truncated relation specialized to a non-zero constant");
                G = G.is_zero() ? dp_monic(K, s) : dp_gcd_euclid(K, G, s);
            }
            if (G.deg() < 1)
                throw std::logic_error("back_substitute: gcd over the tower has degree < 1");
            if (G.deg() != level.delta)
                throw std::logic_error("back_substitute: gcd degree " + std::to_string(G.deg()) +
                                       " does not match the recorded delta " +
                                       std::to_string(level.delta));
            b[i] = select_compatible_root(tower, G, chain.anchors[i]);
            for (int j = i + 1; j < n; ++j) b[j] = tower.lift(b[j]);
        }

        // Every member of L^i must vanish at the chosen points.
        TowerDomain Knew(tower);
        std::vector<TowerElem> pt(n, Knew.zero());
        for (int j = i; j < n; ++j) pt[j] = tower.lift(b[j]);
        for (const auto& f : level.L)
            if (!Knew.is_zero(f.evaluate(pt, Knew)))
                throw std::logic_error("back_substitute: a recorded relation fails at the lifted points");
        if (tower.apply_anchor(tower.lift(b[i])) != chain.anchors[i])
            throw std::logic_error("back_substitute: anchor mismatch at level " + std::to_string(i));
    }

    for (auto& e : b) e = tower.lift(e);
    rs.points = std::move(b);
    return rs;
}

// ---------------------------------------------------------------------------
// Verification and the end-to-end pipeline.

VerifyReport verify_ring_isomorphism(const std::vector<Int>& A, const Int& p,
                                     const std::vector<TowerElem>& points, const Tower& tower,
                                     const Int& k, const Int& t) {
    if (A.size() != points.size())
        throw std::invalid_argument("verify_ring_isomorphism: cardinality mismatch");
    const int n = static_cast<int>(A.size());
    FpDomain fp(p);
    TowerDomain K(tower);
    std::vector<Int> a;
    a.reserve(A.size());
    for (const auto& x : A) a.push_back(mod_reduce(x, p));
    std::vector<TowerElem> pts;
    pts.reserve(points.size());
    for (const auto& e : points) pts.push_back(tower.lift(e));

    VerifyReport rep;
    rep.pass = true;
    enumerate_bounded_visit(n, BoundProfile{k, t > 0 ? t : k}, [&](const IntPoly& f) {
        rep.checked += 1;
        bool zp = f.evaluate(a, fp) == 0;
        bool zt = K.is_zero(f.evaluate(pts, K));
        if (zp != zt) {
            rep.pass = false;
            rep.first_discrepancy = f.to_string() + (zp ? " vanishes at A mod p only"
                                                        : " vanishes at the lifted points only");
            return false;
        }
        return true;
    });
    return rep;
}

VerifyReport verify_ring_isomorphism(const std::vector<Int>& A, const Int& p,
                                     const std::vector<Rat>& points, const Int& k, const Int& t) {
    Tower trivial(p);
    std::vector<TowerElem> pts;
    pts.reserve(points.size());
    for (const auto& q : points) pts.push_back(trivial.from_rat(q));
    return verify_ring_isomorphism(A, p, pts, trivial, k, t);
}

RectifiedSet rectify(const std::vector<Int>& A, const Int& p, const Int& k, bool force,
                     const Int& t) {
    if (!is_probable_prime(p)) throw std::invalid_argument("rectify: p must be prime");
    if (k < 2) throw std::invalid_argument("rectify: k must be >= 2");
    std::vector<Int> a;
    a.reserve(A.size());
    for (const auto& x : A) a.push_back(mod_reduce(x, p));
    {
        std::set<Int> uniq(a.begin(), a.end());
        if (uniq.size() != a.size())
            throw std::invalid_argument("rectify: A contains duplicate residues");
    }
    const int n = static_cast<int>(a.size());
    const BoundProfile profile{k, t > 0 ? t : k};

    SplitRelations split = split_relations(a, p, profile);
    EliminationChain chain = eliminate_forward(split.vanishing, a, p, profile, force);
    RectifiedSet rs{Tower(p)};
    try {
        rs = back_substitute(chain);
    } catch (const std::logic_error& e) {
        // A forced run drops genuine obstructions, so the recorded chain can
        // be inconsistent; report that as a verification failure.
        if (!chain.forced_drop) throw;
        rs.chain = chain;
        rs.gate = guarantee_gate(n, k, k, p);
        rs.guaranteed = rs.gate.guaranteed;
        rs.verified = false;
        rs.verify_message = e.what();
        return rs;
    }
    rs.gate = guarantee_gate(n, k, k, p);
    rs.guaranteed = rs.gate.guaranteed;
    VerifyReport rep = verify_ring_isomorphism(a, p, rs.points, rs.tower, k, profile.t);
    rs.verified = rep.pass;
    rs.verify_message = rep.first_discrepancy;
    rs.relations_checked = rep.checked;
    return rs;
}

}  // namespace rectify
