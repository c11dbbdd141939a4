#pragma once

#include "homlab/object.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace homlab {

/// Runs one command line; `args` excludes the program name. Text goes to
/// `out`, diagnostics to `err`, the JSON report to --out when given.
/// Exit codes: 0 every asserted property held, 1 some property failed,
/// 2 usage, input or capability error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "graph:<name>" or "group:<name>" for a built-in object, anything else is
/// read as a .grf / .cay file.
///   graphs: empty, K<n>, K<n>^1 (looped), E<n> (edgeless), P<n>, C<n>, S<n>
///           (star with n leaves)
///   groups: factors joined by 'x', each one of C<n>, Z<n>, V4, S<n>, A<n>,
///           D<n> (order 2n), Q8, Dic<n>
Object parse_object_spec(const std::string& spec);

}  // namespace homlab
