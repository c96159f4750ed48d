#include "lpp/io.hpp"

#include <array>
#include <charconv>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lpp {

namespace {

constexpr std::array<char, 4> kMagic{'L', 'P', 'P', 'T'};
constexpr std::uint8_t kVersion = 1;

void write_u64_le(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> b{};
    for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b.data(), 8);
}

std::uint64_t read_u64_le(std::istream& in) {
    std::array<unsigned char, 8> b{};
    in.read(reinterpret_cast<char*>(b.data()), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[static_cast<std::size_t>(i)]) << (8 * i);
    return v;
}

double parse_double(const std::string& token) {
    double v = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::invalid_argument("CSV: bad number '" + token + "'");
    return v;
}

}  // namespace

void write_parent_map(std::ostream& out, const PassageField& field) {
    if (field.mode() != GridMode::Square)
        throw std::invalid_argument("parent-map dump requires a square-mode field");
    out.write(kMagic.data(), kMagic.size());
    out.put(static_cast<char>(kVersion));
    write_u64_le(out, static_cast<std::uint64_t>(field.size()));
    const auto bytes = field.parents().bytes();  // rows already byte-aligned
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("parent-map dump: write failed");
}

ParentMap read_parent_map(std::istream& in) {
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) throw std::runtime_error("parent-map: bad magic");
    if (in.get() != kVersion) throw std::runtime_error("parent-map: unsupported version");
    const std::uint64_t n = read_u64_le(in);
    if (!in || n > (1u << 20)) throw std::runtime_error("parent-map: unreasonable size");
    ParentMap map(static_cast<int>(n), GridMode::Square);
    const std::size_t total = ((n + 8) / 8) * (n + 1);
    std::vector<char> buf(total);
    in.read(buf.data(), static_cast<std::streamsize>(total));
    if (!in) throw std::runtime_error("parent-map: truncated bit block");
    for (std::uint64_t y = 0; y <= n; ++y) {
        const char* row = buf.data() + y * ((n + 8) / 8);
        for (std::uint64_t x = 0; x <= n; ++x)
            map.set(static_cast<std::int64_t>(x), static_cast<std::int64_t>(y),
                    (row[x >> 3] >> (x & 7)) & 1);
    }
    return map;
}

void write_interface_csv(std::ostream& out, const InterfacePath& path) {
    out << "k,x,y\n";
    for (std::size_t k = 0; k < path.sites.size(); ++k)
        out << k << ',' << path.sites[k].x << ',' << path.sites[k].y << '\n';
}

void write_path_csv(std::ostream& out, const GeodesicPath& path) {
    out << "k,x,y\n";
    for (std::size_t k = 0; k < path.sites.size(); ++k)
        out << k << ',' << path.sites[k].x << ',' << path.sites[k].y << '\n';
}

void write_splits_csv(std::ostream& out, const std::vector<SplitAngle>& splits) {
    out << "angle,left_root,right_root\n";
    out.precision(17);
    for (const auto& s : splits)
        out << s.angle << ',' << s.left_root << ',' << s.right_root << '\n';
}

void write_boundary_csv(std::ostream& out, const ClusterLabeling& labeling) {
    out << "x,y,root\n";
    for (std::int64_t x = labeling.n; x >= 0; --x)
        out << x << ',' << labeling.n - x << ',' << labeling.label_at(Site{x, labeling.n - x})
            << '\n';
}

void write_times_csv(std::ostream& out, const TimeGrid& grid) {
    out << "x,y,time\n";
    out.precision(17);
    for (int y = 0; y < grid.height; ++y)
        for (int x = 0; x < grid.width; ++x)
            if (grid.has(x, y)) out << x << ',' << y << ',' << grid.at(x, y) << '\n';
}

TimeGrid read_times_csv(std::istream& in) {
    struct Row {
        int x;
        int y;
        double t;
    };
    std::vector<Row> rows;
    int max_x = 0;
    int max_y = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string a, b, c;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c))
            throw std::invalid_argument("times CSV: expected x,y,time");
        if (a == "x") continue;  // header
        Row r{std::stoi(a), std::stoi(b), parse_double(c)};
        if (r.x < 0 || r.y < 0) throw std::invalid_argument("times CSV: negative coordinate");
        max_x = std::max(max_x, r.x);
        max_y = std::max(max_y, r.y);
        rows.push_back(r);
    }
    if (rows.empty()) throw std::invalid_argument("times CSV: no data rows");
    TimeGrid grid(max_x + 1, max_y + 1);
    for (const Row& r : rows) grid.set(r.x, r.y, r.t);
    return grid;
}

}  // namespace lpp
