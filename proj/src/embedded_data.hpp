#ifndef TROPCLUSTER_EMBEDDED_DATA_HPP
#define TROPCLUSTER_EMBEDDED_DATA_HPP

#include <string_view>

namespace tropcluster {

/// Contents of data/<name>.json, compiled in. Throws InvalidArgument.
std::string_view embedded_data(std::string_view name);

}  // namespace tropcluster

#endif  // TROPCLUSTER_EMBEDDED_DATA_HPP
