#include "zsum/algebra.hpp"

#include "zsum/detail/longest_multiset.hpp"
#include "zsum/detail/multisets.hpp"
#include "zsum/error.hpp"

#include <algorithm>
#include <string>

namespace zsum {

SplittingField GroupAlgebra::splitting_field() const
{
    if (!zeta) {
        throw Error(ErrorKind::NotSplitting, "F_" + std::to_string(field.q()) + "[G] was built without a splitting field");
    }
    return SplittingField{group, field, *zeta};
}

AlgebraElement AlgebraElement::constant(const GroupAlgebra& ring, std::int64_t c)
{
    AlgebraElement f(ring);
    f.set_coefficient(ring.group.identity(), c);
    return f;
}

AlgebraElement AlgebraElement::monomial(const GroupAlgebra& ring, const GroupElement& g, std::int64_t c)
{
    AlgebraElement f(ring);
    f.set_coefficient(g, c);
    return f;
}

Residue AlgebraElement::coefficient(const GroupElement& g) const
{
    auto it = coeffs_.find(group().index_of(g));
    return it == coeffs_.end() ? 0 : it->second;
}

void AlgebraElement::set_coefficient(const GroupElement& g, std::int64_t c)
{
    set_raw(group().index_of(g), field().reduce(c));
}

void AlgebraElement::set_raw(std::size_t index, Residue value)
{
    if (value == 0) {
        coeffs_.erase(index);
    } else {
        coeffs_[index] = value;
    }
}

std::vector<std::pair<GroupElement, Residue>> AlgebraElement::terms() const
{
    std::vector<std::pair<GroupElement, Residue>> out;
    for (const auto& [i, c] : coeffs_) {
        out.emplace_back(group().element_at(i), c);
    }
    return out;
}

void AlgebraElement::check_compatible(const AlgebraElement& other) const
{
    if (!(group() == other.group())) {
        throw Error(ErrorKind::GroupMismatch, "operands live in different group algebras");
    }
    if (!(field() == other.field()) || ring_.zeta != other.ring_.zeta) {
        throw Error(ErrorKind::FieldMismatch, "operands have different coefficient fields");
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const
{
    check_compatible(other);
    AlgebraElement out = *this;
    for (const auto& [i, c] : other.coeffs_) {
        auto it = out.coeffs_.find(i);
        out.set_raw(i, field().add(it == out.coeffs_.end() ? 0 : it->second, c));
    }
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const
{
    return *this + other.scaled(field().neg(1));
}

AlgebraElement AlgebraElement::scaled(Residue c) const
{
    AlgebraElement out(ring_);
    for (const auto& [i, v] : coeffs_) {
        out.set_raw(i, field().mul(v, c % field().q()));
    }
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const
{
    check_compatible(other);
    const Group& G = group();
    const PrimeField& F = field();
    std::map<std::size_t, Residue> acc;
    for (const auto& [i, a] : coeffs_) {
        const GroupElement gi = G.element_at(i);
        for (const auto& [j, b] : other.coeffs_) {
            const std::size_t k = G.index_of(G.add(gi, G.element_at(j)));
            acc[k] = F.add(acc[k], F.mul(a, b));
        }
    }
    AlgebraElement out(ring_);
    for (const auto& [k, v] : acc) {
        out.set_raw(k, v);
    }
    return out;
}

AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g)
{
    return f * g;
}

AlgebraElement binomial_product(const GroupAlgebra& ring, const GSequence& s, std::span<const std::int64_t> a)
{
    if (!(s.group() == ring.group)) {
        throw Error(ErrorKind::GroupMismatch, "sequence and algebra over different groups");
    }
    if (static_cast<std::int64_t>(a.size()) != s.length()) {
        throw Error(ErrorKind::PreconditionViolated, "need one constant per sequence entry");
    }
    AlgebraElement product = AlgebraElement::constant(ring, 1);
    const auto entries = s.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Residue ai = ring.field.reduce(a[i]);
        if (ai == 0) {
            throw Error(ErrorKind::ZeroUnit, "a_" + std::to_string(i + 1) + " is 0 mod " + std::to_string(ring.field.q()));
        }
        const AlgebraElement factor =
            AlgebraElement::monomial(ring, entries[i]) - AlgebraElement::constant(ring, static_cast<std::int64_t>(ai));
        product = product * factor;
    }
    return product;
}

Residue char_eval(const Character& chi, const AlgebraElement& f)
{
    const SplittingField& F = chi.field();
    if (!(F.group == f.group())) {
        throw Error(ErrorKind::GroupMismatch, "character and algebra element over different groups");
    }
    if (!(F.field == f.field()) || (f.ring().zeta && *f.ring().zeta != F.zeta)) {
        throw Error(ErrorKind::FieldMismatch, "character and algebra element over different fields");
    }
    Residue total = 0;
    for (const auto& [g, c] : f.terms()) {
        total = F.field.add(total, F.field.mul(c, chi(g)));
    }
    return total;
}

bool is_zero_via_chars(const AlgebraElement& f)
{
    const SplittingField F = f.ring().splitting_field();
    for (const auto& chi : all_characters(F)) {
        if (char_eval(chi, f) != 0) {
            return false;
        }
    }
    return true;
}

AlgebraElement invert(const AlgebraElement& f)
{
    const SplittingField F = f.ring().splitting_field();
    const PrimeField& K = F.field;
    const Group& G = F.group;
    const auto chars = all_characters(F);

    std::vector<Residue> inv_values;
    inv_values.reserve(chars.size());
    for (const auto& chi : chars) {
        const Residue v = char_eval(chi, f);
        if (v == 0) {
            throw Error(ErrorKind::NotUnit, "character (" + to_literal(GroupElement{chi.exps()}) + ") vanishes");
        }
        inv_values.push_back(K.inv(v));
    }

    const Residue inv_order = K.inv(K.reduce(G.order()));
    AlgebraElement out(f.ring());
    for (const auto& g : G.elements()) {
        const GroupElement minus_g = G.negate(g);
        Residue sum = 0;
        for (std::size_t c = 0; c < chars.size(); ++c) {
            sum = K.add(sum, K.mul(chars[c](minus_g), inv_values[c]));
        }
        out.set_coefficient(g, static_cast<std::int64_t>(K.mul(sum, inv_order)));
    }
    return out;
}

AlgebraElement multiple_factorization(const GroupAlgebra& ring, const GroupElement& g, std::int64_t k,
                                      std::int64_t a)
{
    if (k < 1) {
        throw Error(ErrorKind::PreconditionViolated, "k must be positive");
    }
    const Group& G = ring.group;
    const PrimeField& K = ring.field;
    const Residue ar = K.reduce(a);
    AlgebraElement cofactor(ring);
    for (std::int64_t j = 0; j < k; ++j) {
        const AlgebraElement term = AlgebraElement::monomial(
            ring, G.scalar_mul(j, g), static_cast<std::int64_t>(K.pow(ar, static_cast<std::uint64_t>(k - 1 - j))));
        cofactor = cofactor + term;
    }
    return cofactor;
}

namespace {

GSequence to_sequence(const Group& group, const std::vector<std::size_t>& indices)
{
    GSequence s(group);
    for (auto i : indices) {
        s.push(group.element_at(i));
    }
    return s;
}

void check_order(const Group& group, std::int64_t max_order)
{
    if (group.order() > max_order) {
        throw Error(ErrorKind::GroupTooLarge, "|G| = " + std::to_string(group.order()) + " exceeds the cap " +
                                                  std::to_string(max_order));
    }
}

} // namespace

DgrResult d_gr_brute(const Group& group, const PrimeField& field, std::int64_t l_cap, const DgrConfig& config,
                     const Budget& budget)
{
    check_order(group, config.max_order);
    const GroupTable table(group);
    const std::size_t size = table.size();
    const Residue q = field.q();

    std::vector<std::size_t> alphabet;
    for (std::size_t i = 1; i < size; ++i) {
        alphabet.push_back(i);
    }

    // State: the distinct dense products prod (X^{g_i} - a_i) over all a-vectors.
    using Dense = std::vector<Residue>;
    using Products = std::vector<Dense>;
    auto extend = [&](const Products& products, std::size_t g) -> std::optional<Products> {
        Products next;
        next.reserve(products.size() * (q - 1));
        Dense shifted(size);
        for (const auto& p : products) {
            for (std::size_t x = 0; x < size; ++x) {
                shifted[table.add(x, g)] = p[x];
            }
            for (Residue a = 1; a < q; ++a) {
                budget.charge();
                Dense r(size);
                bool zero = true;
                for (std::size_t x = 0; x < size; ++x) {
                    r[x] = field.sub(shifted[x], field.mul(a, p[x]));
                    zero = zero && r[x] == 0;
                }
                if (zero) {
                    return std::nullopt;
                }
                next.push_back(std::move(r));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        return next;
    };
    auto no_bound = [](const Products&) { return detail::kNoBound; };

    Dense one(size, 0);
    one[0] = 1 % q;
    const auto found =
        detail::longest_multiset(alphabet, Products{one}, l_cap, extend, no_bound, budget, config.parallel);
    return {found.length, to_sequence(group, found.witness)};
}

namespace reference {

bool some_binomial_product_vanishes(const GroupAlgebra& ring, const GSequence& s, const Budget& budget)
{
    const auto length = static_cast<std::size_t>(s.length());
    const std::uint64_t q = ring.field.q();
    std::vector<std::size_t> limits(length, static_cast<std::size_t>(q - 2));
    bool vanished = false;
    detail::for_each_box_point(limits, [&](const std::vector<std::size_t>& c) {
        budget.charge();
        std::vector<std::int64_t> a(length);
        for (std::size_t i = 0; i < length; ++i) {
            a[i] = static_cast<std::int64_t>(c[i] + 1);
        }
        if (binomial_product(ring, s, a).is_zero()) {
            vanished = true;
            return false;
        }
        return true;
    });
    return vanished;
}

DgrResult d_gr_brute(const Group& group, const PrimeField& field, std::int64_t l_cap, const Budget& budget)
{
    const GroupAlgebra ring = GroupAlgebra::over(group, field);
    std::vector<std::size_t> alphabet;
    for (std::size_t i = 1; i < static_cast<std::size_t>(group.order()); ++i) {
        alphabet.push_back(i);
    }
    DgrResult result{0, GSequence(group)};
    for (std::int64_t length = 1; length <= l_cap; ++length) {
        std::optional<GSequence> hit;
        detail::for_each_multiset(alphabet.size(), static_cast<std::size_t>(length),
                                  [&](const std::vector<std::size_t>& pick) {
                                      std::vector<std::size_t> indices;
                                      for (auto p : pick) {
                                          indices.push_back(alphabet[p]);
                                      }
                                      GSequence s = to_sequence(group, indices);
                                      if (!some_binomial_product_vanishes(ring, s, budget)) {
                                          hit = std::move(s);
                                          return false;
                                      }
                                      return true;
                                  });
        if (!hit) {
            break;
        }
        result = {length, std::move(*hit)};
    }
    return result;
}

} // namespace reference

} // namespace zsum
