#include "lpp/localtree.hpp"

#include <cmath>
#include <stdexcept>

namespace lpp {

namespace {

constexpr int kEnumerationBitGuard = 28;  // refuse iterating 2^28 trees

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

TmTree::TmTree(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("TmTree: m must be positive");
    words_.assign(static_cast<std::size_t>(bits() + 63) / 64, 0);
}

int TmTree::bit_index(Site z) {
    const std::int64_t k = z.l1();
    if (z.x < 1 || z.y < 1) throw std::invalid_argument("TmTree: not an interior site");
    // diagonals 2..k-1 contribute (k-2)(k-1)/2 bits; diagonal k is indexed by x-1
    return static_cast<int>((k - 2) * (k - 1) / 2 + (z.x - 1));
}

Site TmTree::site_at(int m, int index) {
    for (std::int64_t k = 2; k <= m; ++k) {
        const std::int64_t base = (k - 2) * (k - 1) / 2;
        if (index < base + (k - 1)) return Site{index - base + 1, k - (index - base + 1)};
    }
    throw std::out_of_range("TmTree: bit index out of range");
}

bool TmTree::bit(int index) const {
    if (index < 0 || index >= bits()) throw std::out_of_range("TmTree: bit index out of range");
    return (words_[static_cast<std::size_t>(index) / 64] >> (index % 64)) & 1;
}

void TmTree::set_bit(int index, bool value) {
    if (index < 0 || index >= bits()) throw std::out_of_range("TmTree: bit index out of range");
    const std::uint64_t mask = 1ull << (index % 64);
    if (value)
        words_[static_cast<std::size_t>(index) / 64] |= mask;
    else
        words_[static_cast<std::size_t>(index) / 64] &= ~mask;
}

std::string TmTree::to_string() const {
    const int nibbles = bits() == 0 ? 1 : (bits() + 3) / 4;
    std::string hex;
    bool leading = true;
    for (int i = nibbles - 1; i >= 0; --i) {
        int v = 0;
        for (int b = 3; b >= 0; --b) {
            const int idx = i * 4 + b;
            v = (v << 1) | (idx < bits() && bit(idx) ? 1 : 0);
        }
        if (v == 0 && leading && i != 0) continue;
        leading = false;
        hex += "0123456789abcdef"[v];
    }
    return std::to_string(m_) + ":" + hex;
}

TmTree TmTree::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("TmTree: expected \"m:hexmask\"");
    const int m = std::stoi(text.substr(0, colon));
    TmTree tree(m);
    const std::string hex = text.substr(colon + 1);
    if (hex.empty()) throw std::invalid_argument("TmTree: empty mask");
    const int nibbles = static_cast<int>(hex.size());
    for (int i = 0; i < nibbles; ++i) {
        const int v = hex_value(hex[static_cast<std::size_t>(nibbles - 1 - i)]);
        if (v < 0) throw std::invalid_argument("TmTree: bad hex digit");
        for (int b = 0; b < 4; ++b) {
            const int idx = i * 4 + b;
            const bool on = (v >> b) & 1;
            if (idx >= tree.bits()) {
                if (on) throw std::invalid_argument("TmTree: mask has bits beyond m(m-1)/2");
            } else if (on) {
                tree.set_bit(idx, true);
            }
        }
    }
    return tree;
}

void TmTree::assign_mask(std::uint64_t mask) {
    if (bits() > 64) throw std::invalid_argument("TmTree: mask assignment needs bits <= 64");
    if (bits() < 64 && (mask >> bits()) != 0)
        throw std::invalid_argument("TmTree: mask has bits beyond m(m-1)/2");
    words_.assign(words_.size(), 0);
    if (!words_.empty()) words_[0] = mask;
}

std::uint64_t tm_tree_count(int m) {
    if (m < 1) throw std::invalid_argument("tm_tree_count: m must be positive");
    const int bits = TmTree::bit_count(m);
    if (bits >= 64) throw std::overflow_error("tm_tree_count: exceeds 64 bits");
    return 1ull << bits;
}

void for_each_tm(int m, const std::function<void(const TmTree&)>& visit) {
    const int bits = TmTree::bit_count(m);
    if (bits >= kEnumerationBitGuard)
        throw std::invalid_argument("for_each_tm: refusing to iterate 2^" + std::to_string(bits) +
                                    " trees");
    TmTree tree(m);
    const std::uint64_t count = 1ull << bits;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        tree.assign_mask(mask);
        visit(tree);
    }
}

TmTree extract_tm(const PassageField& field, int m) {
    if (m > field.size()) throw std::out_of_range("extract_tm: m beyond field");
    TmTree tree(m);
    for (int idx = 0; idx < tree.bits(); ++idx) {
        const Site z = TmTree::site_at(m, idx);
        tree.set_bit(idx, field.parents().get(z.x, z.y));
    }
    return tree;
}

TmTree extract_tm_from_diagonals(const PassageField& field, int m) {
    if (m - 1 > field.kept_diagonals())
        throw std::out_of_range("extract_tm_from_diagonals: diagonals 0.." + std::to_string(m - 1) +
                                " not retained");
    TmTree tree(m);
    for (int idx = 0; idx < tree.bits(); ++idx) {
        const Site w = TmTree::site_at(m, idx);
        const auto g = field.diagonal(static_cast<int>(w.l1()) - 1);
        // parent of w is w-(0,1) iff G(w-(0,1)) beats G(w-(1,0)); tie -> left
        tree.set_bit(idx, g[static_cast<std::size_t>(w.x)] > g[static_cast<std::size_t>(w.x - 1)]);
    }
    return tree;
}

WitnessAssignment witness_times(const TmTree& tree, double eps1) {
    if (!(eps1 > 0.0)) throw std::invalid_argument("witness_times: eps1 must be positive");
    const int m = tree.m();
    WitnessAssignment out;
    out.times = TimeGrid(m, m);  // covers {|z| <= m-1}
    out.eps_schedule.resize(static_cast<std::size_t>(m));
    out.eps_schedule[0] = eps1;
    for (int k = 1; k < m; ++k)
        out.eps_schedule[static_cast<std::size_t>(k)] =
            (4.0 * k + 2.0) * out.eps_schedule[static_cast<std::size_t>(k - 1)];

    out.times.set(0, 0, eps1 / 2.0);
    for (int k = 1; k <= m - 1; ++k) {
        const double eps = out.eps_schedule[static_cast<std::size_t>(k - 1)];
        // Walk diagonal k from (0,k) to (k,0), stepping each time down or up
        // two intervals so the next diagonal's parent comparisons come out
        // with the prescribed signs.
        int interval = 2 * k;
        out.times.set(0, k, (interval + 0.5) * eps);
        for (int x = 1; x <= k; ++x) {
            interval += tree.bit_at(Site{x, k + 1 - x}) ? 2 : -2;
            out.times.set(x, k - x, (interval + 0.5) * eps);
        }
    }
    return out;
}

}  // namespace lpp
