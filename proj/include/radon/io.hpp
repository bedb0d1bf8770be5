#ifndef RADON_IO_HPP
#define RADON_IO_HPP

#include <string>
#include <vector>

#include "radon/phantoms.hpp"

// RDK file format: one ASCII header line "RDK1 <image|sinogram> <rows> <cols>\n"
// followed by rows*cols row-major little-endian IEEE-754 doubles. Sinogram rows
// are angles, columns detector bins.

namespace radon::io {

struct RdkArray {
    std::string kind; // "image" or "sinogram"
    int rows = 0;
    int cols = 0;
    std::vector<double> values;
};

void write_rdk(const std::string& path, const RdkArray& arr);
RdkArray read_rdk(const std::string& path);

void write_image(const std::string& path, const Image& img);
void write_sinogram(const std::string& path, const Sinogram& sino);

/// Phantom description: '#' comment lines; data lines "cx cy a b rot_deg density".
EllipsePhantom read_phantom_file(const std::string& path);
void write_phantom_file(const std::string& path, const EllipsePhantom& phantom);

/// Resolves "ellipse-suite", "disk:<r>:<density>", or a file path.
EllipsePhantom resolve_phantom(const std::string& spec);

} // namespace radon::io

#endif
