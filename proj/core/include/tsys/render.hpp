#pragma once

#include <string>

#include "tsys/transfer_system.hpp"

namespace tsys {

/// Node list plus arrows grouped by source, one source per line:
///   nodes: 1 2 3
///   1 -> 2 3
/// Deterministic, byte for byte.
std::string render_ascii(const TransferSystem& sys);

/// Arc diagram as standalone SVG: nodes on a baseline, adjacent arrows as
/// baseline segments, longer arrows as semicircular arcs whose height is
/// half their span. Integer geometry only, so output is byte-identical
/// across runs and platforms.
std::string render_svg(const TransferSystem& sys);

}  // namespace tsys
