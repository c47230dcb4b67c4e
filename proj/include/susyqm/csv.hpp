#pragma once

#include <string>

#include "susyqm/partner.hpp"
#include "susyqm/spectrum.hpp"

namespace susyqm {

// 17-significant-digit decimal rendering used by every CSV column, so that
// identical runs produce byte-identical files.
std::string format_value(double v);

// Header "n,eigenvalue,residual" plus one row per level.
std::string spectrum_to_csv(const Spectrum& spec);

// Header "x,v_plus,v_minus" plus one row per node.
std::string partners_to_csv(const PartnerPair& pair, const Grid& grid);

}  // namespace susyqm
