#include "zsum/acceptance.hpp"

#include "zsum/algebra.hpp"
#include "zsum/constructive.hpp"
#include "zsum/counterexample.hpp"
#include "zsum/cover.hpp"
#include "zsum/davenport.hpp"
#include "zsum/detail/multisets.hpp"
#include "zsum/dgk.hpp"
#include "zsum/error.hpp"
#include "zsum/g0.hpp"
#include "zsum/plane.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

namespace zsum {

namespace {

std::string name_of(const Group& g)
{
    if (g.rank() == 0) {
        return "C1";
    }
    std::string out;
    for (auto n : g.invariants()) {
        out += (out.empty() ? "C" : "+C") + std::to_string(n);
    }
    return out;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok) {
                detail << "FAILED: ";
            } else {
                detail << "; ";
            }
            detail << what;
            ok = false;
        }
    }
};

std::vector<Group> small_groups()
{
    std::vector<Group> out;
    for (std::int64_t n = 2; n <= 10; ++n) {
        out.push_back(make_group({n}));
    }
    out.push_back(make_group({2, 2}));
    out.push_back(make_group({2, 4}));
    out.push_back(make_group({3, 3}));
    out.push_back(make_group({2, 2, 2}));
    return out;
}

// 1: the (5,2) instance.
std::string criterion_counterexample(Check& c)
{
    const CounterexampleSpec spec = CounterexampleSpec::standard(5, 2);
    const UncoverableReport report = verify_uncoverable(spec);
    const UncoverableReport serial = reference::verify_uncoverable(spec);
    const Group G = spec.group();
    const SplittingField F = make_splitting_field(G);
    const bool generic_cover = exists_cover(F, all_characters(F), spec.sequence()).has_value();
    const std::int64_t d = davenport_d(G).d;
    c.expect(report.uncoverable, "split search found a cover");
    c.expect(!generic_cover, "generic cover search found a cover");
    c.expect(serial.uncoverable == report.uncoverable && serial.distributions_checked == report.distributions_checked,
             "serial and parallel verifiers disagree");
    c.expect(spec.length() == 14, "length " + std::to_string(spec.length()));
    c.expect(G.d_star() == 13, "d* " + std::to_string(G.d_star()));
    c.expect(d == 13, "d " + std::to_string(d));
    std::ostringstream out;
    out << to_literal(spec.sequence()) << " uncoverable=" << report.uncoverable << " length=" << spec.length()
        << " d*=" << G.d_star() << " d=" << d << " distributions=" << report.distributions_checked
        << " generic_search=" << (generic_cover ? "cover" : "none");
    return out.str();
}

// 2: dgk equals d on the three small rank-2 groups.
std::string criterion_dgk_equals_d(Check& c)
{
    const std::vector<std::pair<Group, std::int64_t>> cases{
        {make_group({2, 2}), 2}, {make_group({2, 4}), 4}, {make_group({3, 3}), 4}};
    std::ostringstream out;
    for (const auto& [G, want] : cases) {
        const std::int64_t l = dgk_brute(G, theorem_a_bound(G) + 1).l;
        const std::int64_t d = davenport_d(G).d;
        c.expect(l == want && d == want, name_of(G) + " dgk=" + std::to_string(l) + " d=" + std::to_string(d));
        out << name_of(G) << ":" << l << "=" << d << " ";
    }
    return out.str();
}

// 3: Davenport constants.
std::string criterion_davenport(Check& c)
{
    std::ostringstream out;
    for (std::int64_t n = 2; n <= 10; ++n) {
        const std::int64_t d = davenport_d(make_group({n})).d;
        c.expect(d == n - 1, "C" + std::to_string(n) + " d=" + std::to_string(d));
    }
    out << "C2..C10 ok=" << c.ok << " ";
    const std::vector<std::pair<Group, std::int64_t>> cases{
        {make_group({2, 4}), 4}, {make_group({3, 3}), 4}, {make_group({2, 2, 2}), 3}};
    for (const auto& [G, want] : cases) {
        const std::int64_t d = davenport_d(G).d;
        c.expect(d == want, name_of(G) + " d=" + std::to_string(d));
        out << name_of(G) << ":" << d << " ";
    }
    return out.str();
}

// 4: d(G, Z/pZ) = d(G) for p-groups.
std::string criterion_dgr(Check& c)
{
    const std::vector<std::pair<Group, std::uint64_t>> cases{
        {make_group({2, 2}), 2}, {make_group({2, 4}), 2}, {make_group({2, 2, 2}), 2}, {make_group({3, 3}), 3}};
    std::ostringstream out;
    for (const auto& [G, q] : cases) {
        const std::int64_t l = d_gr_brute(G, PrimeField(q), G.order()).l;
        const std::int64_t d = davenport_d(G).d;
        c.expect(l == d, name_of(G) + "/F" + std::to_string(q) + " dgr=" + std::to_string(l) + " d=" + std::to_string(d));
        out << name_of(G) << "/F" << q << ":" << l << "=" << d << " ";
    }
    return out.str();
}

// 5: coset covers against the exhaustive a-vector search.
std::string criterion_oracle(Check& c)
{
    std::ostringstream out;
    for (const auto& [inv, q] : std::vector<std::pair<std::vector<std::int64_t>, std::uint64_t>>{{{2, 2}, 3}, {{3, 3}, 7}}) {
        const Group G = make_group(inv);
        const SplittingField F = make_splitting_field(G, q);
        const GroupAlgebra ring = GroupAlgebra::over(F);
        const auto chars = all_characters(F);
        const auto elements = G.elements();
        std::int64_t checked = 0;
        std::int64_t coverable = 0;
        std::int64_t disagreements = 0;
        for (std::size_t len = 0; len <= 4; ++len) {
            detail::for_each_multiset(elements.size(), len, [&](const std::vector<std::size_t>& pick) {
                GSequence s(G);
                for (auto i : pick) {
                    s.push(elements[i]);
                }
                const auto cert = exists_cover(F, chars, s);
                const bool covered = cert.has_value() && verify_cover(*cert);
                const bool vanishes = reference::some_binomial_product_vanishes(ring, s);
                ++checked;
                coverable += covered;
                if (covered != vanishes) {
                    ++disagreements;
                    c.expect(false, name_of(G) + " " + to_literal(s));
                }
                return true;
            });
        }
        out << name_of(G) << "/F" << q << ": " << checked << " multisets, " << coverable << " coverable, "
            << disagreements << " disagreements; ";
    }
    return out.str();
}

// 6: three-slope unions stay below l(3p - 2l).
std::string criterion_l_triple(Check& c)
{
    std::ostringstream out;
    for (std::int64_t p : {5, 7}) {
        std::int64_t triples = 0;
        for (std::int64_t l = 2; l <= p - 1; ++l) {
            std::int64_t worst = 0;
            for (std::int64_t k1 = 0; k1 < p; ++k1) {
                for (std::int64_t k2 = k1 + 1; k2 < p; ++k2) {
                    for (std::int64_t k3 = k2 + 1; k3 < p; ++k3) {
                        const std::int64_t m = l_triple_max_union(p, l, k1, k2, k3);
                        worst = std::max(worst, m);
                        ++triples;
                        c.expect(m < l * (3 * p - 2 * l), "p=" + std::to_string(p) + " l=" + std::to_string(l));
                    }
                }
            }
            out << "p=" << p << ",l=" << l << ":" << worst << "<" << l * (3 * p - 2 * l) << " ";
        }
    }
    return out.str();
}

// 7: the constructive driver on every length-(d*+1) multiset over G0.
std::string criterion_constructive(Check& c)
{
    std::ostringstream out;
    for (const auto& [p, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const Group G = make_group({p, p * n});
        const SplittingField F = make_splitting_field(G);
        const auto g0 = g0_set(G);
        std::int64_t count = 0;
        std::int64_t failures = 0;
        detail::for_each_multiset(g0.size(), static_cast<std::size_t>(G.d_star() + 1), [&](const std::vector<std::size_t>& pick) {
            GSequence s(G);
            for (auto i : pick) {
                s.push(g0[i]);
            }
            ++count;
            try {
                if (!verify_cover(cover_small_p(F, s))) {
                    ++failures;
                }
            } catch (const Error&) {
                ++failures;
            }
            return true;
        });
        c.expect(failures == 0, name_of(G) + " failures=" + std::to_string(failures));
        out << name_of(G) << ":" << count << " ";
    }
    return out.str();
}

// 8: d* <= d <= d(G,K) <= (n-1) + n ln(|G|/n).
std::string criterion_sandwich(Check& c)
{
    std::ostringstream out;
    for (const auto& G : small_groups()) {
        const std::int64_t bound = theorem_a_bound(G);
        const std::int64_t d = davenport_d(G).d;
        const DgkResult k = dgk_brute(G, bound + 1);
        c.expect(G.d_star() <= d && d <= k.l && k.l <= bound,
                 name_of(G) + " " + std::to_string(G.d_star()) + "," + std::to_string(d) + "," + std::to_string(k.l) +
                     "," + std::to_string(bound));
        out << name_of(G) << ":" << G.d_star() << "<=" << d << "<=" << k.l << "<=" << bound << " ";
    }
    for (std::int64_t n = 2; n <= 12; ++n) {
        const std::int64_t bound = theorem_a_bound(make_group({n}));
        c.expect(bound == n - 1, "bound(C" + std::to_string(n) + ")=" + std::to_string(bound));
    }
    return out.str();
}

// 9: the two smallest splitting primes agree.
std::string criterion_prime_independence(Check& c)
{
    std::ostringstream out;
    for (const auto& inv : std::vector<std::vector<std::int64_t>>{{2, 2}, {2, 4}, {3, 3}}) {
        const Group G = make_group(inv);
        const std::int64_t cap = theorem_a_bound(G) + 1;
        out << name_of(G) << ":";
        std::set<std::int64_t> values;
        for (std::size_t k = 0; k < 2; ++k) {
            DgkConfig config;
            config.prime = splitting_prime(G.exponent(), k);
            const DgkResult r = dgk_brute(G, cap, config);
            values.insert(r.l);
            out << " q=" << r.q << "->" << r.l;
        }
        c.expect(values.size() == 1, name_of(G));
        out << "; ";
    }
    return out.str();
}

// 10: randomized property suites.
struct PropertyGroup {
    Group group;
    SplittingField field;
    std::int64_t d; ///< Davenport constant, also d(G,K) for these groups
};

std::vector<PropertyGroup> property_groups()
{
    std::vector<PropertyGroup> out;
    for (const auto& [inv, d] : std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>{
             {{2, 2}, 2}, {{3, 3}, 4}, {{2, 4}, 4}, {{6}, 5}, {{2, 2, 2}, 3}}) {
        const Group G = make_group(inv);
        out.push_back({G, make_splitting_field(G), d});
    }
    return out;
}

AlgebraElement random_element(const GroupAlgebra& ring, std::mt19937_64& rng)
{
    const auto q = static_cast<std::int64_t>(ring.field.q());
    std::uniform_int_distribution<std::int64_t> coeff(0, q - 1);
    std::bernoulli_distribution keep(std::uniform_real_distribution<double>(0.1, 1.0)(rng));
    AlgebraElement f(ring);
    for (const auto& g : ring.group.elements()) {
        if (keep(rng)) {
            f.set_coefficient(g, coeff(rng));
        }
    }
    return f;
}

GSequence random_sequence(const Group& G, std::int64_t length, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(G.order() - 1));
    GSequence s(G);
    for (std::int64_t i = 0; i < length; ++i) {
        s.push(G.element_at(pick(rng)));
    }
    return s;
}

// A product of binomials that vanishes: a_i read off a coset cover.
AlgebraElement vanishing_product(const PropertyGroup& pg, std::mt19937_64& rng, GSequence& s, std::vector<std::int64_t>& a)
{
    s = random_sequence(pg.group, pg.d + 1, rng);
    const auto chars = all_characters(pg.field);
    const auto cert = exists_cover(pg.field, chars, s);
    if (!cert) {
        throw Error(ErrorKind::InternalCoverFailure, "length d+1 sequence has no cover");
    }
    a.assign(cert->entries.size(), 1); // unassigned entries may take any unit
    for (const auto& asg : cert->assignments) {
        a[asg.entry] = static_cast<std::int64_t>(asg.chi(cert->entries[asg.entry]));
    }
    GSequence ordered(pg.group, cert->entries);
    s = ordered;
    return binomial_product(GroupAlgebra::over(pg.field), s, a);
}

std::string criterion_properties(Check& c, const AcceptanceOptions& options)
{
    std::mt19937_64 rng(options.seed);
    const auto groups = property_groups();
    std::uniform_int_distribution<std::size_t> which(0, groups.size() - 1);
    const int cases = options.property_cases;

    int vanishing_zero = 0;
    int vanishing_fail = 0;
    for (int i = 0; i < cases; ++i) {
        const PropertyGroup& pg = groups[which(rng)];
        const GroupAlgebra ring = GroupAlgebra::over(pg.field);
        AlgebraElement f(ring);
        if (i % 3 == 0) {
            GSequence s;
            std::vector<std::int64_t> a;
            f = vanishing_product(pg, rng, s, a);
            vanishing_fail += !f.is_zero();
        } else {
            f = random_element(ring, rng);
        }
        vanishing_zero += f.is_zero();
        vanishing_fail += is_zero_via_chars(f) != f.is_zero();
    }
    c.expect(vanishing_fail == 0, "vanishing criterion: " + std::to_string(vanishing_fail));

    int units = 0;
    int inverse_fail = 0;
    for (int i = 0; i < cases; ++i) {
        const PropertyGroup& pg = groups[which(rng)];
        const GroupAlgebra ring = GroupAlgebra::over(pg.field);
        const AlgebraElement f = random_element(ring, rng);
        try {
            const AlgebraElement g = invert(f);
            ++units;
            inverse_fail += !(f * g == AlgebraElement::constant(ring, 1)) || !(g * f == AlgebraElement::constant(ring, 1));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotUnit) {
                throw;
            }
            // Some chi(f) = 0, so the chi-idempotent is a nonzero annihilator.
            bool witnessed = false;
            for (const auto& chi : all_characters(pg.field)) {
                if (char_eval(chi, f) != 0) {
                    continue;
                }
                AlgebraElement e_chi(ring);
                for (const auto& g : pg.group.elements()) {
                    e_chi.set_coefficient(g, static_cast<std::int64_t>(chi(pg.group.negate(g))));
                }
                witnessed = !e_chi.is_zero() && (f * e_chi).is_zero();
                break;
            }
            inverse_fail += !witnessed;
        }
    }
    c.expect(inverse_fail == 0, "inversion: " + std::to_string(inverse_fail));

    int cd_fail = 0;
    for (int i = 0; i < cases; ++i) {
        const std::int64_t p = std::array<std::int64_t, 3>{5, 7, 11}[which(rng) % 3];
        std::uniform_int_distribution<std::uint32_t> mask(1, (1u << p) - 1);
        const std::uint32_t A = mask(rng);
        const std::uint32_t B = mask(rng);
        const Group Cp = make_group({p});
        std::set<std::int64_t> sums;
        for (std::int64_t x = 0; x < p; ++x) {
            for (std::int64_t y = 0; y < p; ++y) {
                if ((A >> x & 1u) && (B >> y & 1u)) {
                    sums.insert(Cp.add(Cp.element({x}), Cp.element({y})).coords[0]);
                }
            }
        }
        const auto a = static_cast<std::int64_t>(std::popcount(A));
        const auto b = static_cast<std::int64_t>(std::popcount(B));
        cd_fail += static_cast<std::int64_t>(sums.size()) < std::min(a + b - 1, p);
    }
    c.expect(cd_fail == 0, "Cauchy-Davenport: " + std::to_string(cd_fail));

    int fact_fail = 0;
    for (int i = 0; i < cases; ++i) {
        const PropertyGroup& pg = groups[which(rng)];
        const GroupAlgebra ring = GroupAlgebra::over(pg.field);
        const PrimeField& K = pg.field.field;
        const GroupElement g = pg.group.element_at(std::uniform_int_distribution<std::size_t>(0, pg.group.order() - 1)(rng));
        const std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, 2 * pg.group.exponent() + 1)(rng);
        const std::int64_t a = std::uniform_int_distribution<std::int64_t>(1, static_cast<std::int64_t>(K.q()) - 1)(rng);
        const AlgebraElement lhs =
            (AlgebraElement::monomial(ring, g) - AlgebraElement::constant(ring, a)) * multiple_factorization(ring, g, k, a);
        const AlgebraElement rhs = AlgebraElement::monomial(ring, pg.group.scalar_mul(k, g)) -
                                   AlgebraElement::constant(ring, static_cast<std::int64_t>(K.pow(K.reduce(a), k)));
        fact_fail += !(lhs == rhs);
        if (i % 4 == 0) {
            // Replacing g_i by k_i g_i keeps a vanishing product vanishing.
            GSequence s;
            std::vector<std::int64_t> av;
            vanishing_product(pg, rng, s, av);
            const auto entries = s.entries();
            std::vector<GroupElement> scaled;
            std::vector<std::int64_t> scaled_a;
            for (std::size_t j = 0; j < entries.size(); ++j) {
                const std::int64_t kj = std::uniform_int_distribution<std::int64_t>(1, pg.group.exponent())(rng);
                scaled.push_back(pg.group.scalar_mul(kj, entries[j]));
                scaled_a.push_back(static_cast<std::int64_t>(K.pow(K.reduce(av[j]), kj)));
            }
            AlgebraElement prod = AlgebraElement::constant(ring, 1);
            for (std::size_t j = 0; j < scaled.size(); ++j) {
                prod = prod * (AlgebraElement::monomial(ring, scaled[j]) - AlgebraElement::constant(ring, scaled_a[j]));
            }
            fact_fail += !prod.is_zero();
        }
    }
    c.expect(fact_fail == 0, "factorization: " + std::to_string(fact_fail));

    std::ostringstream out;
    out << cases << " cases each; vanishing (" << vanishing_zero << " zero), inversion (" << units
        << " units), Cauchy-Davenport, factorization; failures " << vanishing_fail + inverse_fail + cd_fail + fact_fail;
    return out.str();
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result)
{
    using Runner = std::function<std::string(Check&)>;
    const std::vector<std::pair<std::string, Runner>> criteria{
        {"(5,2) counterexample is uncoverable", criterion_counterexample},
        {"d(G,K) = d(G) by brute force", criterion_dgk_equals_d},
        {"Davenport constants", criterion_davenport},
        {"d(G,F_p) = d(G) for p-groups", criterion_dgr},
        {"cover search vs a-vector oracle", criterion_oracle},
        {"three-slope union bound", criterion_l_triple},
        {"constructive covers over G0", criterion_constructive},
        {"sandwich and logarithmic bound", criterion_sandwich},
        {"splitting-prime independence", criterion_prime_independence},
        {"property suites", [&options](Check& c) { return criterion_properties(c, options); }},
    };

    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
            continue;
        }
        CriterionResult r;
        r.id = id;
        r.title = criteria[i].first;
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            const std::string info = criteria[i].second(c);
            r.detail = c.ok ? info : c.detail.str() + " | " + info;
        } catch (const std::exception& e) {
            c.ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.passed = c.ok;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result) {
            on_result(r);
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_result_line(const CriterionResult& r)
{
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d  %-38s (%.2fs)  ", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                  r.seconds);
    return head + r.detail;
}

} // namespace zsum
