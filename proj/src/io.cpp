#include "radon/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace radon::io {

namespace {

static_assert(sizeof(double) == 8);

// RDK payloads are little-endian on disk.
void to_little_endian(std::vector<double>& v)
{
    if constexpr (std::endian::native == std::endian::big) {
        for (double& d : v) {
            uint64_t bits;
            std::memcpy(&bits, &d, 8);
            bits = __builtin_bswap64(bits);
            std::memcpy(&d, &bits, 8);
        }
    }
}

[[noreturn]] void io_fail(const std::string& path, const std::string& what)
{
    throw std::runtime_error(path + ": " + what);
}

} // namespace

void write_rdk(const std::string& path, const RdkArray& arr)
{
    if (arr.kind != "image" && arr.kind != "sinogram")
        throw std::invalid_argument("write_rdk: kind must be image or sinogram");
    if (arr.values.size() != static_cast<size_t>(arr.rows) * arr.cols)
        throw std::invalid_argument("write_rdk: value count does not match rows*cols");

    std::ofstream out(path, std::ios::binary);
    if (!out)
        io_fail(path, "cannot open for writing");
    out << "RDK1 " << arr.kind << ' ' << arr.rows << ' ' << arr.cols << '\n';
    std::vector<double> payload = arr.values;
    to_little_endian(payload);
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size() * 8));
    if (!out)
        io_fail(path, "write failed");
}

RdkArray read_rdk(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        io_fail(path, "cannot open");
    std::string header;
    if (!std::getline(in, header))
        io_fail(path, "missing header");
    std::istringstream hs(header);
    std::string magic;
    RdkArray arr;
    hs >> magic >> arr.kind >> arr.rows >> arr.cols;
    if (magic != "RDK1" || (arr.kind != "image" && arr.kind != "sinogram") ||
        arr.rows <= 0 || arr.cols <= 0 || hs.fail())
        io_fail(path, "malformed RDK header: \"" + header + "\"");

    arr.values.resize(static_cast<size_t>(arr.rows) * arr.cols);
    in.read(reinterpret_cast<char*>(arr.values.data()),
            static_cast<std::streamsize>(arr.values.size() * 8));
    if (in.gcount() != static_cast<std::streamsize>(arr.values.size() * 8))
        io_fail(path, "truncated payload");
    to_little_endian(arr.values);
    return arr;
}

void write_image(const std::string& path, const Image& img)
{
    write_rdk(path, {"image", img.grid.n_x(), img.grid.n_x(), img.values});
}

void write_sinogram(const std::string& path, const Sinogram& sino)
{
    write_rdk(path, {"sinogram", sino.grid.n_phi(), sino.grid.n_s(), sino.values});
}

EllipsePhantom read_phantom_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        io_fail(path, "cannot open");
    std::vector<Ellipse> ellipses;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        Ellipse e;
        double rot_deg;
        ls >> e.center.x >> e.center.y >> e.a >> e.b >> rot_deg >> e.density;
        if (ls.fail())
            io_fail(path, "line " + std::to_string(lineno) +
                              ": expected \"cx cy a b rot_deg density\"");
        e.rotation = rot_deg * std::numbers::pi / 180.0;
        ellipses.push_back(e);
    }
    try {
        return make_phantom(std::move(ellipses));
    } catch (const std::invalid_argument& err) {
        io_fail(path, err.what());
    }
}

void write_phantom_file(const std::string& path, const EllipsePhantom& phantom)
{
    std::ofstream out(path);
    if (!out)
        io_fail(path, "cannot open for writing");
    out << "# cx cy a b rot_deg density\n";
    out.precision(17);
    for (const Ellipse& e : phantom.components)
        out << e.center.x << ' ' << e.center.y << ' ' << e.a << ' ' << e.b << ' '
            << e.rotation * 180.0 / std::numbers::pi << ' ' << e.density << '\n';
}

EllipsePhantom resolve_phantom(const std::string& spec)
{
    if (spec == "ellipse-suite")
        return ellipse_suite();
    if (spec.rfind("disk:", 0) == 0) {
        const size_t colon = spec.find(':', 5);
        if (colon == std::string::npos)
            throw std::invalid_argument("disk phantom spec must be disk:<r>:<density>");
        const double r = std::stod(spec.substr(5, colon - 5));
        const double d = std::stod(spec.substr(colon + 1));
        return disk_phantom(r, d);
    }
    return read_phantom_file(spec);
}

} // namespace radon::io
