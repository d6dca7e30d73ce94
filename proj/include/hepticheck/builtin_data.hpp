#ifndef HEPTICHECK_BUILTIN_DATA_HPP
#define HEPTICHECK_BUILTIN_DATA_HPP

#include <string_view>

namespace hepticheck::builtin {

/// Embedded copies of the default data files (data/*.txt ship the same text).
std::string_view syzygy_file();
std::string_view printed_curve_file();
std::string_view singularity_catalog_file();

} // namespace hepticheck::builtin

#endif
