#pragma once

// Published code tables shipped as fixtures: hex parameters transcribed
// verbatim, guarded by FNV-1a checksums so transcription slips are
// distinguishable from code bugs.

#include <cstdint>
#include <string>
#include <vector>

#include "hsd/constructions.hpp"
#include "hsd/matrix.hpp"
#include "hsd/ring.hpp"

namespace hsd {

enum class Construction { Thm1, Thm2, Thm3, BuildingUp };

std::string construction_name(Construction c);
Construction construction_from_name(const std::string& name);

struct FixtureRow {
    int index = 0;                 // row label used in the table
    std::vector<std::string> f;    // thm1: lambda,mu,a,b,c
                                   // thm2: lambda,mu,a_1..a_k
                                   // thm3: x1,x2,x3,a_1..a_k
                                   // building-up: parent row, eps, delta
    int64_t alpha = -1;            // -1 when the table lists no alpha
};

struct FixtureTable {
    std::string id;
    Construction ctor = Construction::Thm1;
    RingId ring = RingId::F4;
    int n = 0;                    // circulant block length
    int k = 1;                    // block count (thm2/thm3)
    int code_length = 0;          // length of the (F4-image) code being claimed
    int expected_d = 0;
    std::string parent;           // building-up source table id
    bool gray_parent = false;     // parent code is the Gray image of an F4U code
    std::vector<FixtureRow> rows;
    uint64_t checksum = 0;
};

const std::vector<FixtureTable>& fixtures();
const FixtureTable& fixture(const std::string& id);  // throws UnknownFixture

uint64_t fixture_fnv(const FixtureTable& t);

// Builds the code a fixture row claims (resolving building-up parents,
// including Gray images). The result is over the fixture's ring; for
// building-up rows it is over F4.
GeneratorMatrix build_fixture_code(const FixtureTable& t, const FixtureRow& row);

}  // namespace hsd
