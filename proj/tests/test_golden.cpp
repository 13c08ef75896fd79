#include <doctest.h>

#include <string>

#include "nutkit/aut.hpp"
#include "nutkit/graph6.hpp"
#include "nutkit/kernel.hpp"
#include "nutkit/orbits.hpp"

using namespace nutkit;

namespace {

// Golden invariants for mid-size graphs (orders 9..16 plus structured
// families), frozen from an independent reference computation. Guards the
// symmetry engine and the exact kernel on inputs beyond the exhaustive
// small-order oracles.
struct GoldenRow {
    const char* graph6;
    const char* aut_order;
    int eta;
    int ov;
    int oe;
};

const GoldenRow kGolden[] = {
    {"KLAXjZMblP}H", "1", 0, 12, 34},
    {"ME\\XjYqiXjZvWSap_", "1", 1, 14, 48},
    {"OMji}}zn~~ny~^j}qL}tx", "1", 0, 16, 90},
    {"O@UEwS_?_g?ACv__UPdCm", "1", 0, 16, 37},
    {"KVnynn}}{z^~", "4", 0, 10, 38},
    {"NI|zzr~MEE~OZ]|jKNo", "1", 0, 15, 66},
    {"H~~~n\\z", "32", 2, 4, 8},
    {"NLYGuCGH?bJCaCpiI?_", "1", 0, 15, 34},
    {"IU?gbIGo?", "1", 0, 10, 13},
    {"NpHtgO@_B[W{O@`@@x?", "1", 1, 15, 35},
    {"Imv~dnutw", "2", 0, 9, 27},
    {"M?LEQ\\?[w@??L_Dg?", "1", 1, 14, 26},
    {"NaKO?G?O\\AX?I?@??Co", "1", 1, 15, 21},
    {"N?OLO`O_?_yDJA@OlS?", "1", 0, 15, 28},
    {"KuUzjLBxqIUM", "1", 0, 12, 36},
    {"M]Dw|V^f{XCaYw?z_", "1", 0, 14, 49},
    {"MKqGUimS@@EE@y?A?", "1", 0, 14, 30},
    {"M_?C?I?oJCDcACGO?", "1", 1, 14, 18},
    {"O?HGvA?GT?GPshGAC`_@C", "1", 0, 16, 30},
    {"LzU^t^ipnymduD", "1", 0, 13, 50},
    {"MWECW@?O?HF?C[?U?", "1", 0, 14, 21},
    {"KtzvY~l\\vxvn", "1", 0, 12, 50},
    {"J\\x{}\\mRSt_", "1", 1, 11, 35},
    {"H}w{eX[", "2", 2, 8, 17},
    {"MDaEIGgG?_C?_c@G_", "1", 0, 14, 20},
    {"KBnnLFjnUz|~", "1", 0, 12, 46},
    {"KSP~ruB|fLFv", "1", 0, 12, 40},
    {"N|gkYEIjnDLKECY_bE_", "1", 0, 15, 46},
    {"IZ\\z~|V~o", "48", 0, 6, 12},
    {"NKK?S?FSbOoGD_CA@C?", "1", 0, 15, 25},
    {"L@?a@??GOG?GC?", "24", 3, 8, 7},
    {"JnJTKVGuCF_", "1", 0, 11, 27},
    {"IZnnmnpzW", "2", 0, 8, 22},
    {"K??S?ASOa@BO", "2", 2, 11, 12},
    {"K^^pvybjp\\Yj", "1", 0, 12, 43},
    {"EznW", "48", 3, 1, 1},
    {"GzK[]K", "16", 1, 1, 2},
    {"IzKWWMBoW", "20", 1, 1, 2},
    {"KzKWWKB?[@wB", "24", 3, 1, 2},
    {"MzKWWKB?W@_B_Bo@_", "28", 1, 1, 2},
    {"IhfB@g]ao", "10", 1, 2, 3},
    {"KhEMB?qEO\\Oi", "48", 3, 1, 1},
    {"MhCKM@_KOp@a@q_h?", "14", 1, 2, 3},
    {"OhCGKF?W@`BABA@`?[SAa", "16", 1, 2, 3},
    {"QhCGGE@oB?EAEAB@?oOEA?[I?gO", "18", 3, 2, 3},
    {"NheAHCPBKGGPGPCG`BG", "60", 0, 1, 2},
    {"K~`HW}GPHDaN", "144", 0, 1, 2},
    {"NHeE@CPBMGGoGPCG`BG", "30", 0, 1, 2},
    {"I?B~vrw}?", "28800", 8, 1, 1},
    {"Or`HOm?OH@ABAG@C_POAJ", "384", 6, 1, 1},
};

} // namespace

TEST_CASE("golden invariants on mid-size graphs") {
    for (const GoldenRow& row : kGolden) {
        CAPTURE(row.graph6);
        const Graph g = parse_graph6(row.graph6);
        const AutGroup a = automorphism_group(g);
        const auto [p, sig] = orbits(g, a);
        CHECK(sig.aut_order == Int(row.aut_order));
        CHECK(sig.ov == row.ov);
        CHECK(sig.oe == row.oe);
        CHECK(nullity(g).eta == row.eta);
    }
}
