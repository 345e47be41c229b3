#pragma once

// k-subsets of [n] = {1, ..., n}, colex order and the family operators
// (shadows, restrictions, starred complements) used by the lower-bound argument.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace kntw {

/// A subset of [n] stored as an n-bit mask (bit i-1 set iff i is a member).
/// Ground sets up to 64 elements occupy a single inline word.
class KSubset {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    /// The empty subset of [ground_size].
    explicit KSubset(int ground_size = 0);
    KSubset(int ground_size, std::initializer_list<int> elements);

    /// Elements must lie in 1..ground_size and be pairwise distinct; order is irrelevant.
    static KSubset from_elements(int ground_size, std::span<const int> elements);

    int ground_size() const noexcept { return n_; }
    int size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    bool contains(int element) const noexcept;

    /// Ascending element list.
    std::vector<int> elements() const;
    /// Largest element, or 0 for the empty set.
    int max_element() const noexcept;

    bool is_subset_of(const KSubset& other) const;
    int intersection_size(const KSubset& other) const;
    KSubset set_minus(const KSubset& other) const;
    KSubset set_union(const KSubset& other) const;
    KSubset intersection(const KSubset& other) const;
    /// [n] minus this set.
    KSubset complement() const;

    std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

    /// "{1,3,4}"
    std::string to_string() const;

    friend bool operator==(const KSubset& a, const KSubset& b) noexcept {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    std::size_t hash() const noexcept;

private:
    void check_same_ground(const KSubset& other) const;
    void set(int element) noexcept;

    int n_;
    boost::container::small_vector<Word, 1> words_;
};

struct KSubsetHash {
    std::size_t operator()(const KSubset& s) const noexcept { return s.hash(); }
};

/// Colex comparison: a < b iff max(a \ b) < max(b \ a).
/// Throws InvalidInput when the cardinalities or ground sets differ.
std::strong_ordering colex_compare(const KSubset& a, const KSubset& b);

/// Colex order extended to mixed cardinalities: smaller sets first, then colex.
bool colex_less(const KSubset& a, const KSubset& b) noexcept;

/// 1-based position of a among all |a|-subsets of [n] in colex order.
std::uint64_t colex_rank(const KSubset& a);

/// Inverse of colex_rank. Requires 1 <= rank <= C(n, k).
KSubset colex_unrank(std::uint64_t rank, int n, int k);

/// Advances s to its colex successor among subsets of the same size.
/// Returns false (leaving s unchanged) when s is the last one.
bool next_colex(KSubset& s);

/// A finite collection of distinct subsets of a common ground set, kept in
/// insertion order. When a uniformity is declared every member has that size.
class SetFamily {
public:
    explicit SetFamily(int ground_size, std::optional<int> uniformity = std::nullopt);
    SetFamily(int ground_size, std::vector<KSubset> members,
              std::optional<int> uniformity = std::nullopt);

    int ground_size() const noexcept { return n_; }
    std::optional<int> uniformity() const noexcept { return uniformity_; }
    /// The common member size if all members share one (declared or observed).
    std::optional<int> common_size() const noexcept;

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(const KSubset& s) const { return index_.count(s) != 0; }

    std::span<const KSubset> members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    /// Copy with members sorted by (size, colex).
    SetFamily sorted() const;

    /// Set equality; order is ignored.
    friend bool operator==(const SetFamily& a, const SetFamily& b);

private:
    void add(KSubset s);

    int n_;
    std::optional<int> uniformity_;
    std::vector<KSubset> members_;
    std::unordered_set<KSubset, KSubsetHash> index_;
};

/// The first m k-subsets of [n] in colex order.
SetFamily first_family(std::uint64_t m, int n, int k);

/// All k-subsets of [n] in colex order.
SetFamily all_subsets(int n, int k);

/// g-shadow: every g-set contained in some member. Output in colex order.
SetFamily shadow(const SetFamily& family, int g);

/// |shadow(first_family(m, n, k), g)|, the minimum g-shadow size of any
/// m-element family of k-subsets.
std::uint64_t min_shadow_size(std::uint64_t m, int n, int k, int g);

/// Union of the g-shadows of uniform layers of pairwise distinct sizes.
SetFamily layered_shadow(std::span<const SetFamily> layers, int g);

struct Restriction {
    SetFamily containing;  // members that contain x
    SetFamily avoiding;    // the rest
};

/// Splits a family by whether each member contains x.
Restriction restrict_to(const SetFamily& family, const KSubset& x);

/// {F \ x : F in family}. Every member must contain x.
SetFamily star_contained(const SetFamily& family, const KSubset& x);

/// Starred complements of a family whose members miss part of x, grouped by
/// class a = |x| - |x ∩ ([n] \ F)|. Class a holds the (n - k - |x| + a)-sets
/// ([n] \ F) \ x.
struct StarredComplement {
    int t = 0;
    std::map<int, SetFamily> classes;

    std::size_t total_size() const;
};

StarredComplement star_complement(const SetFamily& family, const KSubset& x);

}  // namespace kntw
