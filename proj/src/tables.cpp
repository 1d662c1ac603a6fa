#include "hsd/tables.hpp"

#include "hsd/graymap.hpp"
#include "hsd/vec.hpp"

namespace hsd {

std::string construction_name(Construction c) {
    switch (c) {
        case Construction::Thm1: return "thm1";
        case Construction::Thm2: return "thm2";
        case Construction::Thm3: return "thm3";
        case Construction::BuildingUp: return "building_up";
    }
    return "?";
}

Construction construction_from_name(const std::string& name) {
    if (name == "thm1") return Construction::Thm1;
    if (name == "thm2") return Construction::Thm2;
    if (name == "thm3") return Construction::Thm3;
    if (name == "building_up") return Construction::BuildingUp;
    throw ParseError("unknown construction '" + name + "'");
}

uint64_t fixture_fnv(const FixtureTable& t) {
    uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](const std::string& s) {
        for (char c : s) {
            h ^= uint8_t(c);
            h *= 0x100000001b3ull;
        }
        h ^= uint8_t('|');
        h *= 0x100000001b3ull;
    };
    for (const auto& row : t.rows) {
        mix(std::to_string(row.index));
        for (const auto& s : row.f) mix(s);
        mix(std::to_string(row.alpha));
    }
    return h;
}

namespace {

std::vector<FixtureTable> make_fixtures() {
    std::vector<FixtureTable> all;

    {
        FixtureTable t{"26-1", Construction::Thm1, RingId::F4, 6, 1, 24, 8, "", false, {}, 0};
        t.rows = {
            {1, {"1", "1", "(000333)", "(110101)", "(311023)"}, -1},
            {2, {"1", "1", "(001320)", "(102032)", "(103123)"}, -1},
            {3, {"1", "1", "(013032)", "(230111)", "(121202)"}, -1},
            {4, {"1", "1", "(023100)", "(120310)", "(110111)"}, -1},
            {5, {"1", "1", "(111212)", "(231320)", "(023232)"}, -1},
            {6, {"1", "1", "(121303)", "(112002)", "(220222)"}, -1},
            {7, {"1", "1", "(220330)", "(022200)", "(121202)"}, -1},
            {8, {"1", "1", "(233301)", "(013021)", "(123120)"}, -1},
            {9, {"1", "1", "(311001)", "(012300)", "(213210)"}, -1},
            {10, {"1", "1", "(322322)", "(013322)", "(021133)"}, -1},
            {11, {"1", "2", "(023012)", "(302221)", "(020000)"}, -1},
            {12, {"1", "3", "(123322)", "(312000)", "(000020)"}, -1},
            {13, {"2", "1", "(313300)", "(132033)", "(201332)"}, -1},
            {14, {"2", "2", "(301311)", "(023330)", "(221330)"}, -1},
            {15, {"2", "2", "(312221)", "(100032)", "(022133)"}, -1},
            {16, {"3", "1", "(030131)", "(010220)", "(111110)"}, -1},
            {17, {"3", "1", "(032201)", "(021322)", "(010201)"}, -1},
            {18, {"3", "1", "(320011)", "(332012)", "(203112)"}, -1},
            {19, {"3", "1", "(333310)", "(010233)", "(021212)"}, -1},
            {20, {"3", "3", "(210202)", "(233320)", "(302231)"}, -1},
        };
        all.push_back(std::move(t));
    }
    {
        FixtureTable t{"26-2", Construction::BuildingUp, RingId::F4, 6, 1, 26, 8, "26-1", false, {}, 0};
        t.rows = {
            {1, {"9", "1", "(100322012302332000223211)"}, 153},
            {2, {"14", "3", "(000000000000020012300312)"}, 162},
            {3, {"6", "1", "(113021030121032301013110)"}, 165},
            {4, {"17", "2", "(013011212320020111233221)"}, 171},
            {5, {"16", "3", "(202113112010011102220021)"}, 183},
            {6, {"20", "2", "(220131301302312010110301)"}, 189},
            {7, {"19", "3", "(223030120113111120013331)"}, 192},
            {8, {"15", "2", "(113102330210331320300120)"}, 207},
            {9, {"18", "3", "(322333200221101233333323)"}, 216},
            {10, {"13", "2", "(331113313132213232321201)"}, 342},
            {11, {"3", "3", "(220320132223013133231113)"}, 351},
            {12, {"7", "3", "(301102303100323210012113)"}, 405},
            {13, {"10", "3", "(212111031302032101021311)"}, 450},
            {14, {"8", "1", "(201132302202112022200032)"}, 468},
            {15, {"8", "3", "(202101112103220023301203)"}, 471},
            {16, {"8", "2", "(123130331000001322103113)"}, 477},
            {17, {"8", "2", "(220021120302220003032103)"}, 480},
            {18, {"8", "1", "(033203131223103211232233)"}, 495},
            {19, {"8", "2", "(231133303202110122202101)"}, 498},
            {20, {"8", "3", "(100203102201010012113013)"}, 504},
            {21, {"8", "1", "(232031003333223011211202)"}, 507},
            {22, {"8", "1", "(023133033111211002221031)"}, 513},
            {23, {"8", "2", "(301322110132221310102103)"}, 516},
            {24, {"8", "3", "(330021100133123231101222)"}, 522},
            {25, {"8", "3", "(101132103322123130231333)"}, 525},
        };
        all.push_back(std::move(t));
    }
    {
        FixtureTable t{"26-3", Construction::Thm1, RingId::F4U, 3, 1, 24, 8, "", false, {}, 0};
        t.rows = {
            {1, {"1", "2", "(5B6)", "(B68)", "(5C4)"}, -1},
            {2, {"1", "5", "(6D3)", "(70D)", "(3E6)"}, -1},
            {3, {"2", "5", "(62F)", "(BF0)", "(691)"}, -1},
            {4, {"2", "5", "(7CD)", "(EDA)", "(ED2)"}, -1},
            {5, {"2", "5", "(93E)", "(7C9)", "(B5B)"}, -1},
            {6, {"2", "5", "(A2D)", "(ACE)", "(F84)"}, -1},
            {7, {"2", "5", "(F4E)", "(7BD)", "(D1B)"}, -1},
            {8, {"3", "1", "(19D)", "(CAF)", "(AE7)"}, -1},
            {9, {"3", "1", "(2B8)", "(755)", "(ABB)"}, -1},
            {10, {"5", "3", "(835)", "(12F)", "(2C8)"}, -1},
            {11, {"5", "F", "(077)", "(A22)", "(842)"}, -1},
            {12, {"A", "1", "(12A)", "(4EE)", "(B62)"}, -1},
            {13, {"A", "5", "(A92)", "(AB0)", "(1D7)"}, -1},
            {14, {"F", "1", "(FFA)", "(28F)", "(E95)"}, -1},
            {15, {"F", "5", "(F4A)", "(B1E)", "(EA9)"}, -1},
        };
        all.push_back(std::move(t));
    }
    {
        FixtureTable t{"26-4", Construction::BuildingUp, RingId::F4, 3, 1, 26, 8, "26-3", true, {}, 0};
        t.rows = {
            {26, {"3", "3", "(312212221032322210211120)"}, 174},
            {27, {"7", "1", "(010003212121112212011232)"}, 180},
            {28, {"1", "1", "(120212301003313113031212)"}, 198},
            {29, {"15", "3", "(033103000010230311302131)"}, 201},
            {30, {"8", "1", "(002111202112303110121123)"}, 219},
            {31, {"14", "2", "(002200300110121012020033)"}, 225},
            {32, {"4", "1", "(130113020303033122322112)"}, 261},
            {33, {"6", "3", "(110121211101221203200312)"}, 363},
            {34, {"5", "2", "(030010332223122320131030)"}, 369},
            {35, {"13", "3", "(113112211221100311303233)"}, 387},
            {36, {"2", "2", "(303312023022323300120110)"}, 396},
            {37, {"10", "1", "(300013300333121231303101)"}, 423},
            {38, {"12", "3", "(221010231201303010022223)"}, 459},
            {39, {"9", "3", "(121020201211100310201232)"}, 594},
            {40, {"11", "3", "(022213232122010231300111)"}, 630},
            {41, {"10", "3", "(013330212033312303301232)"}, 639},
            {42, {"11", "1", "(323022331330202311021330)"}, 660},
            {43, {"10", "3", "(032211313030013312130200)"}, 666},
            {44, {"10", "1", "(211100302012031010313322)"}, 795},
            {45, {"10", "1", "(112113302311332030122211)"}, 840},
        };
        all.push_back(std::move(t));
    }
    {
        FixtureTable t{"32-1", Construction::Thm1, RingId::F4, 8, 1, 32, 10, "", false, {}, 0};
        t.rows = {
            {1, {"1", "3", "(10302231)", "(31100022)", "(11212033)"}, 1212},
            {2, {"2", "3", "(32211223)", "(31100102)", "(13102211)"}, 1272},
            {3, {"2", "2", "(30102321)", "(13100031)", "(21112012)"}, 1293},
            {4, {"2", "2", "(10010230)", "(11110231)", "(10300010)"}, 1398},
            {5, {"2", "3", "(13320102)", "(13222303)", "(13013122)"}, 1416},
            {6, {"1", "1", "(03232020)", "(31223133)", "(32202231)"}, 1464},
            {7, {"1", "3", "(02111223)", "(01032222)", "(13010203)"}, 1470},
            {8, {"2", "2", "(32213330)", "(23310210)", "(11132220)"}, 1482},
            {9, {"1", "1", "(30121002)", "(10003310)", "(10300131)"}, 1488},
            {10, {"1", "2", "(13113012)", "(33011101)", "(20300113)"}, 1506},
            {11, {"3", "1", "(21003333)", "(21202313)", "(02013201)"}, 1515},
            {12, {"2", "2", "(03233000)", "(32333201)", "(10302000)"}, 1524},
            {13, {"2", "1", "(03022133)", "(10220103)", "(32202231)"}, 1533},
            {14, {"2", "3", "(31320303)", "(23201323)", "(31210211)"}, 1536},
            {15, {"2", "2", "(10312210)", "(21303003)", "(00203133)"}, 1551},
            {16, {"3", "2", "(03110212)", "(01131112)", "(10323223)"}, 1560},
            {17, {"3", "1", "(32021203)", "(11213011)", "(20300232)"}, 1563},
            {18, {"2", "1", "(02203110)", "(23032301)", "(20010221)"}, 1569},
            {19, {"2", "1", "(02321321)", "(02032223)", "(00202020)"}, 1572},
            {20, {"3", "3", "(23103311)", "(00232322)", "(23001013)"}, 1578},
            {21, {"2", "2", "(02122313)", "(21213323)", "(22203030)"}, 1581},
            {22, {"2", "2", "(23311302)", "(03102312)", "(00030201)"}, 1587},
            {23, {"3", "1", "(03203120)", "(10223210)", "(00010101)"}, 1590},
            {24, {"3", "1", "(02011312)", "(03023210)", "(23110113)"}, 1596},
            {25, {"2", "2", "(23010312)", "(02113003)", "(33001023)"}, 1599},
        };
        all.push_back(std::move(t));
    }
    {
        FixtureTable t{"32-2", Construction::Thm1, RingId::F4U, 4, 1, 32, 10, "", false, {}, 0};
        t.rows = {
            {26, {"3", "2", "(9C33)", "(3EF3)", "(C188)"}, 1248},
            {27, {"5", "F", "(29F1)", "(3429)", "(4B16)"}, 1320},
            {28, {"F", "3", "(34CB)", "(38A9)", "(8A80)"}, 1500},
            {29, {"F", "1", "(ECD5)", "(1AC4)", "(3C0C)"}, 1518},
            {30, {"1", "3", "(5CC9)", "(CFAB)", "(48C1)"}, 1542},
            {31, {"F", "F", "(3368)", "(DEEF)", "(A31C)"}, 1554},
            {32, {"A", "3", "(C6BD)", "(1A26)", "(09AB)"}, 1806},
            {33, {"5", "3", "(A00A)", "(75CD)", "(040F)"}, 1830},
            {34, {"1", "2", "(62B3)", "(D70F)", "(5FA0)"}, 1842},
            {35, {"3", "F", "(5F19)", "(CFE2)", "(5241)"}, 1860},
            {36, {"F", "1", "(ADE2)", "(E9C3)", "(F0FF)"}, 1866},
            {37, {"3", "A", "(16AF)", "(0BBE)", "(FC5F)"}, 1884},
        };
        all.push_back(std::move(t));
    }
    {
        FixtureTable t{"36-1", Construction::Thm1, RingId::F4, 9, 1, 36, 12, "", false, {}, 0};
        t.rows = {
            {1, {"3", "2", "(310331201)", "(330313112)", "(001133121)"}, 19548},
            {2, {"1", "1", "(021223233)", "(301010120)", "(323302310)"}, 22149},
        };
        all.push_back(std::move(t));
    }
    {
        FixtureTable t{"38-1", Construction::Thm3, RingId::F4, 6, 3, 38, 12, "", false, {}, 0};
        t.rows = {
            {1, {"3", "2", "1", "(222010)", "(012133)", "(210331)"}, 10152},
        };
        all.push_back(std::move(t));
    }
    {
        FixtureTable t{"40-1", Construction::Thm1, RingId::F4, 10, 1, 40, 12, "", false, {}, 0};
        t.rows = {
            {1, {"1", "1", "(0010301300)", "(1212023113)", "(1212101212)"}, 3795},
            {2, {"2", "3", "(3010333100)", "(0331223323)", "(3221002012)"}, 3855},
            {3, {"2", "3", "(3111233122)", "(0231102110)", "(0023020120)"}, 3990},
            {4, {"2", "3", "(1323200332)", "(3112223320)", "(3311322330)"}, 4020},
            {5, {"2", "3", "(2021122302)", "(2232002130)", "(3122232320)"}, 4035},
            {6, {"2", "3", "(0110332302)", "(3311203021)", "(1020013223)"}, 4050},
            {7, {"2", "3", "(2321203013)", "(1002200000)", "(0000000300)"}, 4080},
            {8, {"2", "3", "(3102032023)", "(2232021033)", "(1023001331)"}, 4095},
            {9, {"1", "1", "(0330131303)", "(1231322020)", "(0100323211)"}, 4140},
            {10, {"3", "2", "(2121010233)", "(0302123032)", "(1333232301)"}, 4155},
            {11, {"3", "2", "(0023012120)", "(3320301220)", "(0313120033)"}, 4170},
            {12, {"1", "1", "(1303123321)", "(0220111331)", "(1331302232)"}, 4185},
            {13, {"2", "3", "(1121131303)", "(1011000231)", "(2221210131)"}, 4200},
            {14, {"3", "2", "(0133033131)", "(1302013013)", "(2230021032)"}, 4215},
            {15, {"3", "2", "(1303120121)", "(2102310210)", "(1321321320)"}, 4230},
            {16, {"2", "3", "(0011032331)", "(2301130211)", "(0312131122)"}, 4245},
            {17, {"2", "3", "(2231132101)", "(0021212121)", "(2300302002)"}, 4260},
            {18, {"3", "2", "(1331212331)", "(2223232310)", "(3310223311)"}, 4290},
            {19, {"3", "2", "(1033123303)", "(1332130232)", "(0323333233)"}, 4305},
            {20, {"2", "3", "(1103013132)", "(1010121102)", "(3102323212)"}, 4320},
            {21, {"1", "1", "(2332231303)", "(1111002223)", "(0200131322)"}, 4335},
            {22, {"3", "2", "(3110020212)", "(2032110332)", "(0203003210)"}, 4350},
            {23, {"3", "2", "(0133213002)", "(1121211002)", "(1012333020)"}, 4365},
            {24, {"3", "3", "(0032013101)", "(1120332311)", "(0000000030)"}, 4380},
            {25, {"2", "3", "(0313223032)", "(2132201232)", "(0211213223)"}, 4395},
        };
        all.push_back(std::move(t));
    }
    {
        FixtureTable t{"40-2", Construction::Thm1, RingId::F4U, 5, 1, 40, 12, "", false, {}, 0};
        t.rows = {
            {26, {"A", "3", "(11C05)", "(E31C7)", "(7D9F6)"}, 4644},
            {27, {"F", "F", "(69F28)", "(66279)", "(01084)"}, 4794},
            {28, {"1", "3", "(BD417)", "(55615)", "(0F0C4)"}, 4872},
            {29, {"A", "3", "(A4E4F)", "(42F5E)", "(B5B25)"}, 4893},
            {30, {"5", "2", "(AB405)", "(FEECE)", "(83444)"}, 4932},
            {31, {"5", "2", "(D12CE)", "(2EA65)", "(A8484)"}, 4968},
            {32, {"2", "1", "(8147A)", "(5B707)", "(91F91)"}, 4986},
            {33, {"1", "2", "(F11B1)", "(A6C40)", "(C0108)"}, 4998},
            {34, {"A", "A", "(DF57B)", "(60252)", "(1B31E)"}, 5001},
            {35, {"A", "2", "(EF44A)", "(68E3B)", "(04140)"}, 5022},
            {36, {"F", "2", "(4ED9F)", "(84931)", "(ABD1F)"}, 5043},
            {37, {"2", "A", "(842AA)", "(517D0)", "(04380)"}, 5046},
            {38, {"2", "1", "(393D8)", "(1C466)", "(5DFD5)"}, 5058},
            {39, {"3", "A", "(0DCDD)", "(DDE45)", "(A3267)"}, 5064},
            {40, {"3", "A", "(86078)", "(529FB)", "(AF92E)"}, 5076},
            {41, {"2", "5", "(C163C)", "(82898)", "(E55D1)"}, 5097},
            {42, {"F", "2", "(F7ABF)", "(4C89B)", "(B1AD5)"}, 5106},
            {43, {"2", "1", "(A8806)", "(4646D)", "(D35D5)"}, 5109},
            {44, {"5", "1", "(16C69)", "(73F32)", "(D59B9)"}, 5112},
            {45, {"5", "F", "(A8992)", "(4A514)", "(3E272)"}, 5118},
            {46, {"F", "3", "(09409)", "(2F629)", "(7E37E)"}, 5127},
            {47, {"A", "2", "(8FF41)", "(3FC7D)", "(9179E)"}, 5139},
            {48, {"F", "2", "(6C1A6)", "(BFC90)", "(96D1E)"}, 5142},
            {49, {"1", "2", "(AB779)", "(7ED06)", "(291EF)"}, 5163},
            {50, {"3", "5", "(1425F)", "(E8AD4)", "(00C18)"}, 5166},
        };
        all.push_back(std::move(t));
    }
    {
        FixtureTable t{"40-3", Construction::Thm2, RingId::F4, 10, 2, 40, 12, "", false, {}, 0};
        t.rows = {
            {51, {"1", "3", "(3212220310)", "(2302200133)"}, 5760},
            {52, {"1", "2", "(2213113102)", "(2022022132)"}, 5910},
            {53, {"2", "1", "(2121231110)", "(0020102020)"}, 6660},
        };
        all.push_back(std::move(t));
    }

    for (auto& t : all) t.checksum = fixture_fnv(t);
    return all;
}

}  // namespace

const std::vector<FixtureTable>& fixtures() {
    static const std::vector<FixtureTable> all = make_fixtures();
    return all;
}

const FixtureTable& fixture(const std::string& id) {
    for (const auto& t : fixtures())
        if (t.id == id) return t;
    throw UnknownFixture(id);
}

GeneratorMatrix build_fixture_code(const FixtureTable& t, const FixtureRow& row) {
    switch (t.ctor) {
        case Construction::Thm1: {
            Theorem1Params p;
            p.ring = t.ring;
            p.lambda = hex_decode(t.ring, row.f[0][0]);
            p.mu = hex_decode(t.ring, row.f[1][0]);
            p.a = parse_vec(t.ring, row.f[2]).v;
            p.b = parse_vec(t.ring, row.f[3]).v;
            p.c = parse_vec(t.ring, row.f[4]).v;
            return thm1_build(p);
        }
        case Construction::Thm2: {
            Theorem2Params p;
            p.ring = t.ring;
            p.lambda = hex_decode(t.ring, row.f[0][0]);
            p.mu = hex_decode(t.ring, row.f[1][0]);
            for (size_t i = 2; i < row.f.size(); ++i)
                p.a_blocks.push_back(parse_vec(t.ring, row.f[i]).v);
            return thm2_build(p);
        }
        case Construction::Thm3: {
            Theorem3Params p;
            p.ring = t.ring;
            p.x1 = hex_decode(t.ring, row.f[0][0]);
            p.x2 = hex_decode(t.ring, row.f[1][0]);
            p.x3 = hex_decode(t.ring, row.f[2][0]);
            for (size_t i = 3; i < row.f.size(); ++i)
                p.a_blocks.push_back(parse_vec(t.ring, row.f[i]).v);
            return thm3_build(p);
        }
        case Construction::BuildingUp: {
            const FixtureTable& src = fixture(t.parent);
            const int want = std::stoi(row.f[0]);
            const FixtureRow* parent_row = nullptr;
            for (const auto& r : src.rows)
                if (r.index == want) parent_row = &r;
            if (!parent_row) throw UnknownFixture(t.parent + " row " + row.f[0]);
            GeneratorMatrix parent = build_fixture_code(src, *parent_row);
            if (t.gray_parent) parent = gray_image(parent);
            const uint8_t eps = hex_decode(RingId::F4, row.f[1][0]);
            const auto delta = parse_vec(RingId::F4, row.f[2]).v;
            return building_up(parent, delta, eps);
        }
    }
    throw UnknownFixture(t.id);
}

}  // namespace hsd
