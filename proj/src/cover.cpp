#include "zsum/cover.hpp"

#include "zsum/detail/bitset.hpp"
#include "zsum/error.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace zsum {

bool verify_cover(const CoverCertificate& cert)
{
    std::vector<char> used(cert.entries.size(), 0);
    for (const auto& a : cert.assignments) {
        if (a.entry >= cert.entries.size() || used[a.entry]) {
            return false;
        }
        used[a.entry] = 1;
        if (!(a.chi.field() == cert.field)) {
            return false;
        }
    }
    for (const auto& chi : cert.target) {
        bool covered = false;
        for (const auto& a : cert.assignments) {
            const GroupElement& g = cert.entries[a.entry];
            if (chi(g) == a.chi(g)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            return false;
        }
    }
    return true;
}

namespace detail {

namespace {

struct StateKey {
    std::vector<std::uint64_t> words;
    std::vector<std::int64_t> counts;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const
    {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        auto mix = [&h](std::uint64_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        for (auto w : k.words) {
            mix(w);
        }
        for (auto c : k.counts) {
            mix(static_cast<std::uint64_t>(c));
        }
        return h;
    }
};

class Search {
public:
    Search(const CharacterTable& table, std::span<const std::size_t> target, std::span<const std::size_t> elements,
           const Budget& budget)
        : target_(target.begin(), target.end()), budget_(budget)
    {
        const std::size_t h = target_.size();
        // classes_[t][j]: positions of target characters agreeing with target_[j] on element t
        classes_.resize(elements.size());
        class_of_.resize(elements.size());
        for (std::size_t t = 0; t < elements.size(); ++t) {
            std::map<Residue, std::size_t> ids;
            class_of_[t].resize(h);
            for (std::size_t j = 0; j < h; ++j) {
                const Residue v = table.value(target_[j], elements[t]);
                auto [it, inserted] = ids.emplace(v, classes_[t].size());
                if (inserted) {
                    classes_[t].emplace_back(h);
                }
                classes_[t][it->second].set(j);
                class_of_[t][j] = it->second;
            }
        }
    }

    std::optional<std::vector<CoverSolver::Choice>> run(std::vector<std::int64_t> counts)
    {
        Bitset covered(target_.size());
        std::vector<CoverSolver::Choice> stack;
        if (descend(covered, counts, stack)) {
            return stack;
        }
        return std::nullopt;
    }

private:
    bool descend(const Bitset& covered, std::vector<std::int64_t>& counts, std::vector<CoverSolver::Choice>& stack)
    {
        budget_.charge();
        const std::size_t h = target_.size();
        const std::size_t uncovered = h - covered.count();
        if (uncovered == 0) {
            return true;
        }
        const std::size_t types = counts.size();

        // each further coset of element t adds at most max_gain[t] new characters
        std::size_t capacity = 0;
        for (std::size_t t = 0; t < types; ++t) {
            if (counts[t] == 0) {
                continue;
            }
            std::size_t best = 0;
            for (const auto& cls : classes_[t]) {
                best = std::max(best, covered.count_new(cls));
            }
            capacity += static_cast<std::size_t>(counts[t]) * best;
            if (capacity >= uncovered) {
                break;
            }
        }
        if (capacity < uncovered) {
            return false;
        }

        StateKey key{covered.words(), counts};
        if (failed_.contains(key)) {
            return false;
        }

        // uncovered character lying in the fewest distinct available cosets
        std::size_t pivot = h;
        std::size_t pivot_options = 0;
        std::vector<std::vector<std::uint64_t>> seen;
        for (std::size_t j = 0; j < h; ++j) {
            if (covered.test(j)) {
                continue;
            }
            seen.clear();
            for (std::size_t t = 0; t < types; ++t) {
                if (counts[t] == 0) {
                    continue;
                }
                Bitset gain = classes_[t][class_of_[t][j]];
                std::vector<std::uint64_t> fresh = gain.words();
                for (std::size_t w = 0; w < fresh.size(); ++w) {
                    fresh[w] &= ~covered.words()[w];
                }
                if (std::find(seen.begin(), seen.end(), fresh) == seen.end()) {
                    seen.push_back(std::move(fresh));
                }
            }
            if (pivot == h || seen.size() < pivot_options) {
                pivot = j;
                pivot_options = seen.size();
                if (pivot_options <= 1) {
                    break;
                }
            }
        }
        if (pivot_options == 0) {
            failed_.insert(std::move(key));
            return false;
        }

        std::vector<std::pair<std::size_t, std::size_t>> options; // (gain, type)
        for (std::size_t t = 0; t < types; ++t) {
            if (counts[t] > 0) {
                options.emplace_back(covered.count_new(classes_[t][class_of_[t][pivot]]), t);
            }
        }
        std::stable_sort(options.begin(), options.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });

        for (const auto& [gain, t] : options) {
            Bitset next = covered;
            next |= classes_[t][class_of_[t][pivot]];
            --counts[t];
            stack.push_back({t, target_[pivot]});
            if (descend(next, counts, stack)) {
                ++counts[t];
                return true;
            }
            stack.pop_back();
            ++counts[t];
        }
        failed_.insert(std::move(key));
        return false;
    }

    std::vector<std::size_t> target_;
    std::vector<std::vector<Bitset>> classes_;
    std::vector<std::vector<std::size_t>> class_of_;
    std::unordered_set<StateKey, StateKeyHash> failed_;
    const Budget& budget_;
};

} // namespace

CoverSolver::CoverSolver(const SplittingField& field) : field_(field), table_(field) {}

std::optional<std::vector<CoverSolver::Choice>> CoverSolver::solve(std::span<const std::size_t> target,
                                                                   std::span<const std::size_t> elements,
                                                                   std::span<const std::int64_t> counts,
                                                                   const Budget& budget) const
{
    if (target.empty()) {
        return std::vector<Choice>{};
    }
    for (std::size_t t = 0; t < elements.size(); ++t) {
        if (elements[t] == 0 && counts[t] > 0) {
            // <0>^perp is all of G^
            return std::vector<Choice>{{t, target.front()}};
        }
    }
    Search search(table_, target, elements, budget);
    return search.run(std::vector<std::int64_t>(counts.begin(), counts.end()));
}

} // namespace detail

std::optional<CoverCertificate> exists_cover(const SplittingField& field, std::span<const Character> target,
                                             const GSequence& s, const Budget& budget)
{
    const Group& G = field.group;
    if (!(s.group() == G)) {
        throw Error(ErrorKind::GroupMismatch, "sequence is not over the field's group");
    }
    std::vector<std::size_t> target_idx;
    for (const auto& chi : target) {
        if (!(chi.field() == field)) {
            throw Error(ErrorKind::FieldMismatch, "target character over a different splitting field");
        }
        target_idx.push_back(chi.index());
    }
    std::sort(target_idx.begin(), target_idx.end());
    target_idx.erase(std::unique(target_idx.begin(), target_idx.end()), target_idx.end());

    std::vector<std::size_t> elements;
    std::vector<std::int64_t> counts;
    std::vector<std::size_t> first_entry;
    std::size_t offset = 0;
    for (const auto& [g, k] : s.multiplicities()) {
        elements.push_back(G.index_of(g));
        counts.push_back(k);
        first_entry.push_back(offset);
        offset += static_cast<std::size_t>(k);
    }

    const detail::CoverSolver solver(field);
    auto choices = solver.solve(target_idx, elements, counts, budget);
    if (!choices) {
        return std::nullopt;
    }

    CoverCertificate cert{field, s.entries(), std::vector<Character>(target.begin(), target.end()), {}};
    std::vector<std::size_t> used(elements.size(), 0);
    for (const auto& c : *choices) {
        const std::size_t entry = first_entry[c.type] + used[c.type]++;
        cert.assignments.push_back({entry, Character(field, G.element_at(c.character).coords)});
    }
    return cert;
}

} // namespace zsum
