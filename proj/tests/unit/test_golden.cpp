#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "stokes/sweep.hpp"

// Golden CSVs were generated by `stokes-squeeze preset figN` after the
// closed forms were checked against the quadrature and grid-search oracles.
TEST_CASE("presets reproduce the golden CSVs byte-for-byte") {
  for (const stokes::sweep::Preset& p : stokes::sweep::presets()) {
    CAPTURE(p.name);
    std::ifstream in(std::string(STOKES_GOLDEN_DIR) + "/" + p.name + ".csv", std::ios::binary);
    REQUIRE(in);
    std::ostringstream golden;
    golden << in.rdbuf();
    const auto cfg = p.to_run_config();
    CHECK(stokes::sweep::csv_text(cfg, stokes::sweep::run_study(cfg)) == golden.str());
  }
}
