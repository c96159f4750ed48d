#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpp/field.hpp"

namespace lpp {

// A directed tree on {|z| <= m}: both axes are always fully connected, and
// every interior site (x >= 1, y >= 1, x + y <= m) picks one parent. Interior
// sites are ordered by (|z|, x) ascending; bit 1 = parent is z-(0,1),
// bit 0 = parent is z-(1,0).
class TmTree {
public:
    TmTree() = default;
    explicit TmTree(int m);

    int m() const { return m_; }
    int bits() const { return bit_count(m_); }

    static int bit_count(int m) { return m * (m - 1) / 2; }
    // Position of an interior site in the bit order.
    static int bit_index(Site z);
    // Interior site at a bit position (inverse of bit_index for order m).
    static Site site_at(int m, int index);

    bool bit(int index) const;
    void set_bit(int index, bool value);
    bool bit_at(Site z) const { return bit(bit_index(z)); }
    void set_bit_at(Site z, bool value) { set_bit(bit_index(z), value); }

    // Interchange form "m:hexmask", most significant bit = last interior site.
    std::string to_string() const;
    static TmTree parse(const std::string& text);

    // Low 64 bits of the mask (full mask for m <= 11); handy as histogram key.
    std::uint64_t low_mask() const { return words_.empty() ? 0 : words_[0]; }
    void assign_mask(std::uint64_t mask);

    friend bool operator==(const TmTree&, const TmTree&) = default;

private:
    int m_ = 1;
    std::vector<std::uint64_t> words_;
};

// |T_m| = 2^(m(m-1)/2); throws once the count no longer fits in 64 bits.
std::uint64_t tm_tree_count(int m);

// Visits every tree of T_m exactly once (ascending mask order). Iteration is
// refused when the count reaches 2^28.
void for_each_tm(int m, const std::function<void(const TmTree&)>& visit);

// Restriction of the field's geodesic tree to {|z| <= m}, read from parent bits.
TmTree extract_tm(const PassageField& field, int m);

// Same tree via the sign conditions on retained diagonals: the bit of w is 1
// iff G(w - (1,0)) - G(w - (1,0) + (1,-1)) <= 0. Needs keep_diagonals >= m-1.
TmTree extract_tm_from_diagonals(const PassageField& field, int m);

// Explicit times on {|z| <= m-1} forcing the tree, plus the epsilon ladder
// eps[k+1] = (4k+2) eps[k] that the interval construction walks.
struct WitnessAssignment {
    TimeGrid times;
    std::vector<double> eps_schedule;  // eps_1 .. eps_m
};

WitnessAssignment witness_times(const TmTree& tree, double eps1);

}  // namespace lpp
