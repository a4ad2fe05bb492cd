#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oddcut/instance.hpp"
#include "oddcut/lp_cert.hpp"

namespace oddcut {

/// Instance text format, one directive per line:
///   directed | undirected
///   nodes N
///   kind node | edge            (optional; inferred otherwise)
///   edge U V [COST] [xMULT]
///   terminal V
///   protected-node V
///   protected-edge U V
///   budget K
/// '#' starts a comment. Throws ParseError with the 1-based line number.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance. `comments` are emitted first as "# ..." lines.
std::string format_instance(const Instance& instance,
                            const std::vector<std::string>& comments = {});

/// Certificate lines: "primal E_INDEX P/Q", "flow P/Q V0 ... Vm", "tight V0 ... Vm".
/// Missing primal coordinates are 0.
CertificateBundle parse_certificate(std::string_view text, int variable_count);
std::string format_certificate(const CertificateBundle& certificate);

/// FNV-1a over the formatted instance.
std::uint64_t instance_hash(const Instance& instance);

std::string read_file(const std::string& path);

}  // namespace oddcut
