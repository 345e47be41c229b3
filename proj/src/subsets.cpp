#include "kntw/subsets.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "kntw/arith.hpp"
#include "kntw/errors.hpp"

namespace kntw {

namespace {

std::size_t word_count(int n) { return n <= 0 ? 1 : static_cast<std::size_t>((n + 63) / 64); }

}  // namespace

KSubset::KSubset(int ground_size) : n_(ground_size), words_(word_count(ground_size), 0) {
    if (ground_size < 0) throw InvalidInput("negative ground set size");
}

KSubset::KSubset(int ground_size, std::initializer_list<int> elements)
    : KSubset(from_elements(ground_size, std::span<const int>(elements.begin(), elements.size()))) {}

KSubset KSubset::from_elements(int ground_size, std::span<const int> elements) {
    KSubset s(ground_size);
    for (int e : elements) {
        if (e < 1 || e > ground_size)
            throw InvalidInput("element " + std::to_string(e) + " outside [1," +
                               std::to_string(ground_size) + "]");
        if (s.contains(e)) throw InvalidInput("duplicate element " + std::to_string(e));
        s.set(e);
    }
    return s;
}

void KSubset::set(int element) noexcept {
    int bit = element - 1;
    words_[bit / kWordBits] |= Word{1} << (bit % kWordBits);
}

int KSubset::size() const noexcept {
    int total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
}

bool KSubset::contains(int element) const noexcept {
    if (element < 1 || element > n_) return false;
    int bit = element - 1;
    return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1U;
}

std::vector<int> KSubset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(static_cast<int>(w) * kWordBits + b + 1);
            bits &= bits - 1;
        }
    }
    return out;
}

int KSubset::max_element() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w])
            return static_cast<int>(w) * kWordBits + (kWordBits - std::countl_zero(words_[w]));
    }
    return 0;
}

void KSubset::check_same_ground(const KSubset& other) const {
    if (n_ != other.n_)
        throw InvalidInput("subsets over different ground sets [" + std::to_string(n_) +
                           "] and [" + std::to_string(other.n_) + "]");
}

bool KSubset::is_subset_of(const KSubset& other) const {
    check_same_ground(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

int KSubset::intersection_size(const KSubset& other) const {
    check_same_ground(other);
    int total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        total += std::popcount(words_[w] & other.words_[w]);
    return total;
}

KSubset KSubset::set_minus(const KSubset& other) const {
    check_same_ground(other);
    KSubset out(*this);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
    return out;
}

KSubset KSubset::set_union(const KSubset& other) const {
    check_same_ground(other);
    KSubset out(*this);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
    return out;
}

KSubset KSubset::intersection(const KSubset& other) const {
    check_same_ground(other);
    KSubset out(*this);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
    return out;
}

KSubset KSubset::complement() const {
    KSubset out(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    int tail = n_ % kWordBits;
    if (tail != 0) out.words_.back() &= (Word{1} << tail) - 1;
    if (n_ == 0) out.words_[0] = 0;
    return out;
}

std::string KSubset::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

std::size_t KSubset::hash() const noexcept {
    std::size_t h = std::hash<int>{}(n_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::strong_ordering colex_compare(const KSubset& a, const KSubset& b) {
    if (a.ground_size() != b.ground_size())
        throw InvalidInput("colex_compare: different ground sets");
    if (a.size() != b.size())
        throw InvalidInput("colex_compare: cardinalities " + std::to_string(a.size()) + " and " +
                           std::to_string(b.size()) + " differ");
    // the larger max of the symmetric difference is the higher differing bit
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t w = wa.size(); w-- > 0;) {
        if (wa[w] != wb[w]) return wa[w] < wb[w] ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool colex_less(const KSubset& a, const KSubset& b) noexcept {
    int sa = a.size();
    int sb = b.size();
    if (sa != sb) return sa < sb;
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t w = wa.size(); w-- > 0;)
        if (wa[w] != wb[w]) return wa[w] < wb[w];
    return false;
}

std::uint64_t colex_rank(const KSubset& a) {
    BigInt rank = 1;
    int i = 0;
    for (int e : a.elements()) {
        ++i;
        rank += binomial(e - 1, i);
    }
    if (rank > std::numeric_limits<std::uint64_t>::max())
        throw ResourceError("colex rank does not fit in 64 bits");
    return rank.convert_to<std::uint64_t>();
}

KSubset colex_unrank(std::uint64_t rank, int n, int k) {
    if (n < 0 || k < 0 || k > n) throw InvalidInput("colex_unrank: need 0 <= k <= n");
    BigInt total = binomial(n, k);
    if (rank < 1 || BigInt(rank) > total)
        throw InvalidInput("colex_unrank: rank " + std::to_string(rank) + " outside [1, C(" +
                           std::to_string(n) + "," + std::to_string(k) + ")]");
    BigInt remaining = rank - 1;
    std::vector<int> elements;
    elements.reserve(static_cast<std::size_t>(k));
    int upper = n - 1;  // candidate for (element - 1)
    for (int i = k; i >= 1; --i) {
        int c = upper;
        while (binomial(c, i) > remaining) --c;
        elements.push_back(c + 1);
        remaining -= binomial(c, i);
        upper = c - 1;
    }
    return KSubset::from_elements(n, elements);
}

bool next_colex(KSubset& s) {
    std::vector<int> e = s.elements();
    const std::size_t k = e.size();
    if (k == 0) return false;
    for (std::size_t j = 0; j < k; ++j) {
        int limit = (j + 1 < k) ? e[j + 1] : s.ground_size() + 1;
        if (e[j] + 1 < limit) {
            ++e[j];
            for (std::size_t i = 0; i < j; ++i) e[i] = static_cast<int>(i) + 1;
            s = KSubset::from_elements(s.ground_size(), e);
            return true;
        }
    }
    return false;
}

SetFamily::SetFamily(int ground_size, std::optional<int> uniformity)
    : n_(ground_size), uniformity_(uniformity) {
    if (ground_size < 0) throw InvalidInput("negative ground set size");
    if (uniformity && (*uniformity < 0 || *uniformity > ground_size))
        throw InvalidInput("uniformity outside [0, n]");
}

SetFamily::SetFamily(int ground_size, std::vector<KSubset> members, std::optional<int> uniformity)
    : SetFamily(ground_size, uniformity) {
    members_.reserve(members.size());
    index_.reserve(members.size());
    for (auto& m : members) add(std::move(m));
}

void SetFamily::add(KSubset s) {
    if (s.ground_size() != n_) throw InvalidInput("family member over a different ground set");
    if (uniformity_ && s.size() != *uniformity_)
        throw InvalidInput("member " + s.to_string() + " violates uniformity " +
                           std::to_string(*uniformity_));
    if (!index_.insert(s).second) throw InvalidInput("duplicate member " + s.to_string());
    members_.push_back(std::move(s));
}

std::optional<int> SetFamily::common_size() const noexcept {
    if (uniformity_) return uniformity_;
    if (members_.empty()) return std::nullopt;
    int k = members_.front().size();
    for (const auto& m : members_)
        if (m.size() != k) return std::nullopt;
    return k;
}

SetFamily SetFamily::sorted() const {
    std::vector<KSubset> copy = members_;
    std::sort(copy.begin(), copy.end(), colex_less);
    return SetFamily(n_, std::move(copy), uniformity_);
}

bool operator==(const SetFamily& a, const SetFamily& b) {
    if (a.n_ != b.n_ || a.size() != b.size()) return false;
    return std::all_of(a.begin(), a.end(), [&](const KSubset& s) { return b.contains(s); });
}

std::size_t StarredComplement::total_size() const {
    std::size_t total = 0;
    for (const auto& [a, fam] : classes) total += fam.size();
    return total;
}

SetFamily first_family(std::uint64_t m, int n, int k) {
    if (n < 0 || k < 0 || k > n) throw InvalidInput("first_family: need 0 <= k <= n");
    if (BigInt(m) > binomial(n, k))
        throw InvalidInput("first_family: m = " + std::to_string(m) + " exceeds C(" +
                           std::to_string(n) + "," + std::to_string(k) + ")");
    std::vector<KSubset> members;
    members.reserve(m);
    if (m > 0) {
        KSubset s = colex_unrank(1, n, k);
        members.push_back(s);
        while (members.size() < m) {
            next_colex(s);
            members.push_back(s);
        }
    }
    return SetFamily(n, std::move(members), k);
}

SetFamily all_subsets(int n, int k) { return first_family(binomial_u64(n, k), n, k); }

namespace {

// Calls fn on every g-subset of the given ascending element list.
template <typename Fn>
void for_each_subset_of_size(int n, const std::vector<int>& elements, int g, Fn&& fn) {
    const std::size_t s = elements.size();
    const auto r = static_cast<std::size_t>(g);
    if (r > s) return;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    std::vector<int> picked(r);
    while (true) {
        for (std::size_t i = 0; i < r; ++i) picked[i] = elements[idx[i]];
        fn(KSubset::from_elements(n, picked));
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == s - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SetFamily shadow(const SetFamily& family, int g) {
    if (g < 0) throw InvalidInput("shadow: negative size");
    std::unordered_set<KSubset, KSubsetHash> seen;
    for (const auto& member : family) {
        if (g > member.size())
            throw InvalidInput("shadow: size " + std::to_string(g) + " exceeds member " +
                               member.to_string());
        for_each_subset_of_size(family.ground_size(), member.elements(), g,
                                [&](KSubset s) { seen.insert(std::move(s)); });
    }
    std::vector<KSubset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), colex_less);
    return SetFamily(family.ground_size(), std::move(out), g);
}

std::uint64_t min_shadow_size(std::uint64_t m, int n, int k, int g) {
    if (g < 0 || g >= k) throw InvalidInput("min_shadow_size: need 0 <= g < k");
    return shadow(first_family(m, n, k), g).size();
}

SetFamily layered_shadow(std::span<const SetFamily> layers, int g) {
    if (layers.empty()) throw InvalidInput("layered_shadow: no layers");
    const int n = layers.front().ground_size();
    std::vector<int> sizes;
    std::unordered_set<KSubset, KSubsetHash> seen;
    for (const auto& layer : layers) {
        if (layer.ground_size() != n) throw InvalidInput("layered_shadow: mixed ground sets");
        auto k = layer.common_size();
        if (!k) throw InvalidInput("layered_shadow: non-uniform layer");
        if (!layer.empty() || layer.uniformity()) {
            if (std::find(sizes.begin(), sizes.end(), *k) != sizes.end())
                throw InvalidInput("layered_shadow: two layers of size " + std::to_string(*k));
            sizes.push_back(*k);
        }
        if (!layer.empty() && g >= *k)
            throw InvalidInput("layered_shadow: g must be below every layer size");
        for (const auto& s : shadow(layer, g)) seen.insert(s);
    }
    std::vector<KSubset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), colex_less);
    return SetFamily(n, std::move(out), g);
}

Restriction restrict_to(const SetFamily& family, const KSubset& x) {
    std::vector<KSubset> in;
    std::vector<KSubset> out;
    for (const auto& member : family) (x.is_subset_of(member) ? in : out).push_back(member);
    return {SetFamily(family.ground_size(), std::move(in), family.uniformity()),
            SetFamily(family.ground_size(), std::move(out), family.uniformity())};
}

SetFamily star_contained(const SetFamily& family, const KSubset& x) {
    std::vector<KSubset> out;
    out.reserve(family.size());
    for (const auto& member : family) {
        if (!x.is_subset_of(member))
            throw InvalidInput("star_contained: member " + member.to_string() +
                               " does not contain " + x.to_string());
        out.push_back(member.set_minus(x));
    }
    std::optional<int> k;
    if (auto c = family.common_size()) k = *c - x.size();
    // F -> F \ x is injective on sets containing x, so no duplicates arise
    return SetFamily(family.ground_size(), std::move(out), k);
}

StarredComplement star_complement(const SetFamily& family, const KSubset& x) {
    StarredComplement result;
    result.t = x.size();
    std::map<int, std::unordered_set<KSubset, KSubsetHash>> buckets;
    std::map<int, std::vector<KSubset>> ordered;
    for (const auto& member : family) {
        KSubset comp = member.complement();
        int a = result.t - x.intersection_size(comp);
        KSubset starred = comp.set_minus(x);
        if (buckets[a].insert(starred).second) ordered[a].push_back(std::move(starred));
    }
    for (auto& [a, sets] : ordered) {
        int size = sets.front().size();
        result.classes.emplace(a, SetFamily(family.ground_size(), std::move(sets), size));
    }
    return result;
}

}  // namespace kntw
