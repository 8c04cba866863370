#include "zsum/character.hpp"

#include "zsum/error.hpp"

namespace zsum {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n)
{
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

Character::Character(SplittingField field, std::vector<std::int64_t> exps)
    : field_(std::move(field)), exps_(std::move(exps))
{
    const auto& inv = field_.group.invariants();
    if (exps_.size() != inv.size()) {
        throw Error(ErrorKind::GroupMismatch, "character exponent vector has wrong length");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        exps_[i] = mod(exps_[i], inv[i]);
    }
}

Character Character::trivial(const SplittingField& field)
{
    return Character(field, std::vector<std::int64_t>(field.group.rank(), 0));
}

std::int64_t Character::pairing(const GroupElement& g) const
{
    const Group& G = group();
    if (!G.contains(g)) {
        throw Error(ErrorKind::GroupMismatch, "(" + to_literal(g) + ") is not in C[" + to_literal(G) + "]");
    }
    const std::int64_t n = G.exponent();
    std::int64_t t = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        const std::int64_t scale = n / G.invariants()[i];
        t = (t + exps_[i] * g.coords[i] % n * scale) % n;
    }
    return t;
}

Character Character::operator*(const Character& other) const
{
    if (!(field_ == other.field_)) {
        throw Error(ErrorKind::FieldMismatch, "characters over different splitting fields");
    }
    std::vector<std::int64_t> e = exps_;
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += other.exps_[i];
    }
    return Character(field_, std::move(e));
}

Character Character::pow(std::int64_t k) const
{
    std::vector<std::int64_t> e = exps_;
    const auto& inv = group().invariants();
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = mod(mod(k, inv[i]) * e[i], inv[i]);
    }
    return Character(field_, std::move(e));
}

bool Character::is_trivial() const
{
    for (auto e : exps_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

std::size_t Character::index() const
{
    return group().index_of(GroupElement{exps_});
}

std::vector<Character> all_characters(const SplittingField& field)
{
    std::vector<Character> out;
    for (auto& e : field.group.elements()) {
        out.emplace_back(field, std::move(e.coords));
    }
    return out;
}

std::vector<Character> perp(const SplittingField& field, std::span<const GroupElement> generators)
{
    std::vector<Character> out;
    for (auto& chi : all_characters(field)) {
        bool trivial_on_all = true;
        for (const auto& h : generators) {
            if (chi.pairing(h) != 0) {
                trivial_on_all = false;
                break;
            }
        }
        if (trivial_on_all) {
            out.push_back(std::move(chi));
        }
    }
    return out;
}

std::vector<Character> perp(const SplittingField& field, const GroupElement& g)
{
    return perp(field, std::span<const GroupElement>(&g, 1));
}

Character psi(const SplittingField& field)
{
    standard_basis_rank2(field.group);
    return Character(field, {1, 0});
}

Character phi(const SplittingField& field)
{
    standard_basis_rank2(field.group);
    return Character(field, {0, 1});
}

CharacterTable::CharacterTable(const SplittingField& field) : size_(static_cast<std::size_t>(field.group.order()))
{
    const auto elements = field.group.elements();
    values_.resize(size_ * size_);
    for (const auto& chi : all_characters(field)) {
        const std::size_t c = chi.index();
        for (std::size_t g = 0; g < size_; ++g) {
            values_[c * size_ + g] = chi(elements[g]);
        }
    }
}

} // namespace zsum
