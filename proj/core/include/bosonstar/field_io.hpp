#pragma once

#include <filesystem>
#include <iosfwd>

#include "bosonstar/field.hpp"

namespace bosonstar {

/// CSV with header `r,value`, `xi,value` or `r,re,im`; one row per node,
/// 17 significant digits so a round trip through text is lossless.
void write_csv(std::ostream& os, const RadialField& u);
void write_csv(std::ostream& os, const SpectralField& v);
void write_csv(std::ostream& os, const ComplexRadialField& psi);

void write_csv(const std::filesystem::path& path, const RadialField& u);
void write_csv(const std::filesystem::path& path, const SpectralField& v);
void write_csv(const std::filesystem::path& path, const ComplexRadialField& psi);

/// Reads an `r,value` file. The grid is reconstructed from the node column,
/// which must be j*dr for j = 1..n; anything else throws InvalidArgument.
RadialField read_radial_csv(std::istream& is);
RadialField read_radial_csv(const std::filesystem::path& path);

}  // namespace bosonstar
