#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "lpp/time_source.hpp"

namespace lpp {

// Diagonal mode covers {x + y <= N}; Square mode covers [0, N]^2.
enum class GridMode : std::uint8_t { Diagonal, Square };

struct FieldOptions {
    GridMode mode = GridMode::Diagonal;
    int keep_diagonals = -1;  // retain G on anti-diagonals 0..keep_diagonals (-1 = none)
    int workers = 1;
};

// One parent bit per site, rows byte-aligned so concurrent writers on one
// anti-diagonal never share a byte (each row appears once per diagonal).
// Bit 1 = parent is z-(0,1), bit 0 = parent is z-(1,0). Origin bit is 0.
class ParentMap {
public:
    ParentMap() = default;
    ParentMap(int n, GridMode mode);

    bool get(std::int64_t x, std::int64_t y) const {
        const std::size_t i = offsets_[static_cast<std::size_t>(y)] + static_cast<std::size_t>(x >> 3);
        return (bits_[i] >> (x & 7)) & 1;
    }
    void set(std::int64_t x, std::int64_t y, bool bit) {
        const std::size_t i = offsets_[static_cast<std::size_t>(y)] + static_cast<std::size_t>(x >> 3);
        const std::uint8_t mask = static_cast<std::uint8_t>(1u << (x & 7));
        if (bit)
            bits_[i] |= mask;
        else
            bits_[i] &= static_cast<std::uint8_t>(~mask);
    }

    int size() const { return n_; }
    GridMode mode() const { return mode_; }
    int row_bits(int y) const { return mode_ == GridMode::Square ? n_ + 1 : n_ + 1 - y; }
    std::span<const std::uint8_t> bytes() const { return bits_; }

    friend bool operator==(const ParentMap&, const ParentMap&) = default;

private:
    int n_ = -1;
    GridMode mode_ = GridMode::Diagonal;
    std::vector<std::size_t> offsets_;  // byte offset of each row, plus total
    std::vector<std::uint8_t> bits_;
};

// Last-passage times over a box, materialized as the parent map plus the
// final wavefront; anti-diagonals 0..keep are retained on request. The
// competition-interface trace (diagonals 0..N) is recorded during the sweep
// since it needs G comparisons the parent map does not preserve.
class PassageField {
public:
    int size() const { return n_; }
    GridMode mode() const { return mode_; }
    int kept_diagonals() const { return static_cast<int>(kept_.size()) - 1; }
    const TimeSource& times() const { return times_; }
    const ParentMap& parents() const { return parents_; }

    bool contains(Site z) const {
        if (z.x < 0 || z.y < 0) return false;
        return mode_ == GridMode::Square ? (z.x <= n_ && z.y <= n_) : (z.x + z.y <= n_);
    }
    bool parent_bit(Site z) const {
        if (!contains(z)) throw std::out_of_range("parent_bit: site outside field");
        return parents_.get(z.x, z.y);
    }

    // G on a retained anti-diagonal; index i holds the site at
    // x = diagonal_xmin(k) + i (the offset is 0 for diagonals up to N).
    std::span<const double> diagonal(int k) const {
        if (k < 0 || k >= static_cast<int>(kept_.size()))
            throw std::out_of_range("diagonal not kept");
        return kept_[static_cast<std::size_t>(k)];
    }
    int diagonal_xmin(int k) const {
        return mode_ == GridMode::Square ? std::max(0, k - n_) : 0;
    }

    // G on the last computed anti-diagonal (diagonal N in Diagonal mode,
    // diagonal 2N in Square mode); index i holds the site at x = far_xmin()+i.
    std::span<const double> far_wavefront() const { return far_; }
    int far_xmin() const { return far_xmin_; }

    // x-coordinates of the competition interface, phi_0..phi_N.
    const std::vector<std::int32_t>& interface_x() const { return iface_x_; }

private:
    friend PassageField compute_field(const TimeSource&, int, FieldOptions);

    TimeSource times_;
    int n_ = 0;
    GridMode mode_ = GridMode::Diagonal;
    ParentMap parents_;
    std::vector<std::vector<double>> kept_;
    std::vector<double> far_;
    int far_xmin_ = 0;
    std::vector<std::int32_t> iface_x_;
};

PassageField compute_field(const TimeSource& times, int n, FieldOptions options = {});

inline PassageField compute_field(const EnvSpec& spec, int n, int keep_m, FieldOptions options = {}) {
    options.keep_diagonals = keep_m;
    return compute_field(TimeSource(spec), n, options);
}

// Last-passage vectors on one anti-diagonal, ordered (m,0), (m-1,1), ..., (0,m).
// g = y + x componentwise by construction.
struct DiagonalVectors {
    int m = 0;
    std::vector<double> g;  // last-passage times
    std::vector<double> x;  // site times
    std::vector<double> y;  // g - x
};

DiagonalVectors diagonal_vectors(const PassageField& field, int m);

}  // namespace lpp
