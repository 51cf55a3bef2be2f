#include "pezzo/fixtures.hpp"

namespace pezzo::fixtures {

const std::array<const char*, 10> e6_a1_vertices = {
    "125", "126", "134", "136", "145", "234", "235", "246", "356", "456"};

const std::array<std::array<const char*, 9>, 5> e6_a2x3_vertices = {{
    {"12", "134", "234", "56", "125", "126", "34", "356", "456"},
    {"13", "125", "235", "46", "134", "136", "25", "246", "456"},
    {"14", "126", "246", "35", "134", "145", "26", "235", "356"},
    {"15", "136", "356", "24", "125", "145", "36", "234", "246"},
    {"16", "145", "456", "23", "126", "136", "45", "234", "235"},
}};

const std::array<const char*, 10> e7_a1_vertices = {
    "124", "126", "134", "135", "157", "235", "237", "367", "456", "457"};

const std::array<std::array<const char*, 3>, 12> e7_a2_vertices = {{
    {"12", "135", "235"},
    {"14", "157", "457"},
    {"23", "124", "134"},
    {"26", "237", "367"},
    {"37", "135", "157"},
    {"45", "134", "135"},
    {"46", "124", "126"},
    {"57", "235", "237"},
    {"67", "456", "457"},
    {"1", "237", "456"},
    {"3", "126", "457"},
    {"5", "124", "367"},
}};

const std::array<std::array<const char*, 12>, 9> e7_a3x2_vertices = {{
    // six vertices from pairs of trivalent nodes; the node labels open each factor
    {"124", "367", "5", "347", "46", "126", "135", "235", "12", "257", "37", "157"},
    {"124", "134", "23", "136", "46", "126", "237", "235", "57", "467", "1", "456"},
    {"124", "134", "23", "267", "5", "367", "457", "157", "14", "156", "67", "456"},
    {"135", "157", "37", "147", "45", "134", "237", "456", "1", "245", "26", "367"},
    {"135", "235", "12", "234", "45", "134", "457", "456", "67", "127", "3", "126"},
    {"237", "235", "57", "356", "26", "367", "457", "157", "14", "246", "3", "126"},
    // three vertices from pairs of antipodal bivalent nodes
    {"126", "124", "46", "567", "3", "457", "235", "135", "12", "137", "57", "237"},
    {"134", "124", "23", "125", "45", "135", "456", "237", "1", "236", "67", "457"},
    {"157", "135", "37", "345", "14", "457", "367", "124", "5", "146", "26", "237"},
}};

const std::array<std::array<const char*, 28>, 3> e7_a7_vertices = {{
    {"126", "124", "134", "135", "235", "237", "456", "457", "567", "46",
     "136", "23", "125", "45", "234", "12", "137", "57", "467", "1",
     "236", "67", "127", "3", "13", "56", "2", "47"},
    {"126", "457", "157", "135", "235", "237", "367", "124", "567", "3",
     "246", "14", "345", "37", "257", "12", "137", "57", "356", "26",
     "146", "5", "347", "46", "35", "24", "7", "16"},
    {"134", "135", "157", "457", "237", "456", "367", "124", "125", "45",
     "147", "37", "345", "14", "156", "67", "236", "1", "245", "26",
     "146", "5", "267", "23", "15", "36", "4", "27"},
}};

const std::array<std::array<int, 15>, 4> firsching_matrix = {{
    {4, -4, 2, 2, -4, -4, 0, 2, -4, 2, -1, 4, -2, 0, -2},
    {0, -4, -4, 2, 4, 2, -4, 2, 2, -4, -1, -1, 0, 4, 0},
    {0, 0, 4, -4, 0, -4, 0, 4, 4, -4, 0, 0, 4, 0, -4},
    {0, 0, 0, 4, 3, -4, 4, 4, -4, 0, -3, 3, 1, 0, 1},
}};

const std::array<std::array<int, 4>, 45> e6_amplitude_quadruples = {{
    {1, 3, 8, 9},   {1, 3, 8, 12},  {1, 3, 9, 11},  {1, 3, 10, 11}, {1, 3, 10, 12},
    {1, 4, 6, 10},  {1, 4, 6, 14},  {1, 4, 8, 12},  {1, 4, 8, 14},  {1, 4, 10, 12},
    {1, 6, 9, 11},  {1, 6, 9, 14},  {1, 6, 10, 11}, {1, 8, 9, 14},  {2, 3, 7, 10},
    {2, 3, 7, 13},  {2, 3, 9, 11},  {2, 3, 9, 13},  {2, 3, 10, 11}, {2, 5, 6, 9},
    {2, 5, 6, 15},  {2, 5, 7, 13},  {2, 5, 7, 15},  {2, 5, 9, 13},  {2, 6, 9, 11},
    {2, 6, 10, 11}, {2, 6, 10, 15}, {2, 7, 10, 15}, {3, 7, 8, 12},  {3, 7, 8, 13},
    {3, 7, 10, 12}, {3, 8, 9, 13},  {4, 5, 6, 14},  {4, 5, 6, 15},  {4, 5, 7, 8},
    {4, 5, 7, 15},  {4, 5, 8, 14},  {4, 6, 10, 15}, {4, 7, 8, 12},  {4, 7, 10, 12},
    {4, 7, 10, 15}, {5, 6, 9, 14},  {5, 7, 8, 13},  {5, 8, 9, 13},  {5, 8, 9, 14},
}};

const std::array<std::vector<int>, 15> e6_u_nonneighbors = {{
    {2, 5, 7, 13, 15},
    {1, 4, 8, 12, 14},
    {4, 5, 6, 14, 15},
    {2, 3, 9, 11, 13},
    {1, 3, 10, 11, 12},
    {3, 7, 8, 12, 13},
    {1, 6, 9, 11, 14},
    {2, 6, 10, 11, 15},
    {4, 7, 10, 12, 15},
    {5, 8, 9, 13, 14},
    {4, 5, 7, 8, 12, 13, 14, 15},
    {2, 5, 6, 9, 11, 13, 14, 15},
    {1, 4, 6, 10, 11, 12, 14, 15},
    {2, 3, 7, 10, 11, 12, 13, 15},
    {1, 3, 8, 9, 11, 12, 13, 14},
}};

const std::array<std::vector<int>, 34> e7_u_nonneighbors = {{
    {2, 3, 21, 22, 23, 24, 28, 30, 32},
    {1, 8, 19, 20, 25, 26, 27, 29, 31, 33},
    {1, 4, 6, 11, 13, 14, 16, 18, 25, 33},
    {3, 5, 7, 8, 12, 17, 19, 21, 29},
    {4, 6, 9, 13, 20, 26, 28, 30, 31, 32},
    {3, 5, 8, 10, 12, 14, 17, 19, 21, 22, 24, 25, 26, 27, 28, 29, 34},
    {4, 10, 14, 22, 24, 25, 26, 27, 28, 34},
    {2, 4, 6, 11, 13, 14, 16, 18, 21, 22, 23, 24, 25, 28, 30, 32, 33},
    {5, 11, 14, 16, 19, 21, 22, 23, 24, 25, 27, 29, 33},
    {6, 7, 15, 16, 23, 29, 30, 31, 33},
    {3, 8, 9, 15, 17, 22, 26, 27, 28, 29, 30, 31, 34},
    {4, 6, 14, 15, 16, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 33, 34},
    {3, 5, 8, 14, 15, 16, 17, 19, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 33, 34},
    {3, 6, 7, 8, 9, 12, 13, 17, 19, 20, 21, 26, 28, 29, 30, 31, 32},
    {10, 11, 12, 13, 19, 20, 21, 24, 25, 32},
    {3, 8, 9, 10, 12, 13, 17, 19, 20, 21, 22, 24, 25, 26, 27, 28, 29, 30, 31, 32, 34},
    {4, 6, 11, 13, 14, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33},
    {3, 8, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33},
    {2, 4, 6, 9, 13, 14, 15, 16, 17, 18, 22, 26, 28, 30, 31, 32, 34},
    {2, 5, 14, 15, 16, 17, 18, 22, 34},
    {1, 4, 6, 8, 9, 13, 14, 15, 16, 17, 18, 22, 25, 26, 27, 28, 29, 30, 31, 33, 34},
    {1, 6, 7, 8, 9, 11, 12, 13, 16, 17, 18, 19, 20, 21, 25, 26, 29, 30, 31, 32, 33},
    {1, 8, 9, 10, 12, 13, 17, 18, 26, 34},
    {1, 6, 7, 8, 9, 12, 13, 15, 16, 17, 18, 26, 29, 30, 31, 33, 34},
    {2, 3, 6, 7, 8, 9, 12, 13, 15, 16, 17, 18, 21, 22, 26, 28, 29, 30, 31, 32, 34},
    {2, 5, 6, 7, 11, 12, 13, 14, 16, 17, 18, 19, 21, 22, 23, 24, 25, 29, 30, 32, 33},
    {2, 6, 7, 9, 11, 12, 13, 16, 17, 18, 21, 30, 32},
    {1, 5, 6, 7, 8, 11, 12, 13, 14, 16, 17, 18, 19, 21, 25, 29, 33},
    {2, 4, 6, 9, 10, 11, 12, 13, 14, 16, 17, 18, 21, 22, 24, 25, 26, 28, 30, 32, 34},
    {1, 5, 8, 10, 11, 12, 13, 14, 16, 17, 18, 19, 21, 22, 24, 25, 26, 27, 29, 33, 34},
    {2, 5, 10, 11, 12, 13, 14, 16, 17, 18, 19, 21, 22, 24, 25, 32, 34},
    {1, 5, 8, 14, 15, 16, 17, 18, 19, 22, 25, 26, 27, 29, 31, 33, 34},
    {2, 3, 8, 9, 10, 12, 13, 17, 18, 21, 22, 24, 26, 28, 30, 32, 34},
    {6, 7, 11, 12, 13, 16, 19, 20, 21, 23, 24, 25, 29, 30, 31, 32, 33},
}};

const char* const e7_nonedge_pairs_text =
    "s1*s2,s1*s21,s1*s22,s1*s23,s1*s24,s1*s28,s1*s3,s1*s30,s1*s32,s10*s15,s10*s16,s10*s23,"
    "s10*s29,s10*s30,s10*s31,s10*s33,s11*s15,s11*s17,s11*s22,s11*s26,s11*s27,s11*s28,s11*s29,s11*s30,s11*s31,"
    "s11*s34,s12*s14,s12*s15,s12*s16,s12*s22,s12*s23,s12*s24,s12*s25,s12*s26,s12*s27,s12*s28,s12*s29,s12*s30,"
    "s12*s31,s12*s33,s12*s34,s13*s14,s13*s15,s13*s16,s13*s17,s13*s19,s13*s21,s13*s22,s13*s23,s13*s24,s13*s25,"
    "s13*s26,s13*s27,s13*s28,s13*s29,s13*s30,s13*s31,s13*s33,s13*s34,s14*s17,s14*s19,s14*s20,s14*s21,s14*s26,"
    "s14*s28,s14*s29,s14*s30,s14*s31,s14*s32,s15*s19,s15*s20,s15*s21,s15*s24,s15*s25,s15*s32,s16*s17,s16*s19,"
    "s16*s20,s16*s21,s16*s22,s16*s24,s16*s25,s16*s26,s16*s27,s16*s28,s16*s29,s16*s30,s16*s31,s16*s32,s16*s34,"
    "s17*s19,s17*s20,s17*s21,s17*s22,s17*s23,s17*s24,s17*s25,s17*s26,s17*s27,s17*s28,s17*s29,s17*s30,s17*s31,"
    "s17*s32,s17*s33,s18*s19,s18*s20,s18*s21,s18*s22,s18*s23,s18*s24,s18*s25,s18*s26,s18*s27,s18*s28,s18*s29,"
    "s18*s30,s18*s31,s18*s32,s18*s33,s19*s22,s19*s26,s19*s28,s19*s30,s19*s31,s19*s32,s19*s34,s2*s19,s2*s20,"
    "s2*s25,s2*s26,s2*s27,s2*s29,s2*s31,s2*s33,s2*s8,s20*s22,s20*s34,s21*s22,s21*s25,s21*s26,s21*s27,s21*s28,"
    "s21*s29,s21*s30,s21*s31,s21*s33,s21*s34,s22*s25,s22*s26,s22*s29,s22*s30,s22*s31,s22*s32,s22*s33,s23*s26,"
    "s23*s34,s24*s26,s24*s29,s24*s30,s24*s31,s24*s33,s24*s34,s25*s26,s25*s28,s25*s29,s25*s30,s25*s31,s25*s32,"
    "s25*s34,s26*s29,s26*s30,s26*s32,s26*s33,s27*s30,s27*s32,s28*s29,s28*s33,s29*s30,s29*s32,s29*s34,s3*s11,"
    "s3*s13,s3*s14,s3*s16,s3*s18,s3*s25,s3*s33,s3*s4,s3*s6,s30*s33,s30*s34,s31*s32,s31*s34,s32*s33,s32*s34,"
    "s33*s34,s4*s12,s4*s17,s4*s19,s4*s21,s4*s29,s4*s5,s4*s7,s4*s8,s5*s13,s5*s20,s5*s26,s5*s28,s5*s30,s5*s31,"
    "s5*s32,s5*s6,s5*s9,s6*s10,s6*s12,s6*s14,s6*s17,s6*s19,s6*s21,s6*s22,s6*s24,s6*s25,s6*s26,s6*s27,s6*s28,"
    "s6*s29,s6*s34,s6*s8,s7*s10,s7*s14,s7*s22,s7*s24,s7*s25,s7*s26,s7*s27,s7*s28,s7*s34,s8*s11,s8*s13,s8*s14,"
    "s8*s16,s8*s18,s8*s21,s8*s22,s8*s23,s8*s24,s8*s25,s8*s28,s8*s30,s8*s32,s8*s33,s9*s11,s9*s14,s9*s16,s9*s19,"
    "s9*s21,s9*s22,s9*s23,s9*s24,s9*s25,s9*s27,s9*s29,s9*s33";

const std::array<FacetClass, 5> e7_facet_classes = {{
    // associahedra
    {{132, 330, 300, 120, 20}, {9, 11, 27}},
    // 4-associahedron x segment
    {{84, 210, 196, 84, 16}, {6, 8, 12, 14, 18, 19, 24, 28, 31, 32, 33, 34}},
    // pentagon x pentagon x segment
    {{50, 125, 120, 55, 12}, {13, 16, 17, 21, 22, 25, 26, 29, 30}},
    // two sporadic types
    {{158, 395, 358, 142, 23}, {2, 3, 5, 7, 15, 23}},
    {{168, 420, 380, 150, 24}, {1, 4, 10, 20}},
}};

const std::array<std::array<int, 6>, 3> example_cubic_matrix = {{
    {-2, 24, 16, 27, 14, 1},
    {-25, 3, 28, 13, 5, 7},
    {-26, -4, 1, -14, 9, 6},
}};

const std::array<const char*, 10> e6_census_triangles = {
    "E4 F24 G2", "E4 F34 G3", "E5 F15 G1", "E5 F25 G2", "E6 F16 G1",
    "E6 F36 G3", "F14 F25 F36", "F14 F26 F35", "F15 F26 F34", "F16 F24 F35"};

const std::array<const char*, 90> e6_census_quadrilaterals = {
    "E1 E5 G3 G4",     "E1 E5 G3 G6",     "E1 E6 F16 G5",    "E1 E6 G2 G4",
    "E1 E6 G2 G5",     "E1 E6 G3 G4",     "E1 F12 F14 F36",  "E1 F12 F14 G1",
    "E1 F12 F15 F36",  "E1 F13 F14 G1",   "E1 F13 F16 F25",  "E1 F15 F36 G6",
    "E1 F16 F25 G5",   "E2 E4 G1 G5",     "E2 E4 G1 G6",     "E2 E4 G3 G6",
    "E2 E5 F25 G4",    "E2 E5 G1 G6",     "E2 E5 G3 G4",     "E2 E5 G3 G6",
    "E2 F12 F25 F34",  "E2 F12 F26 F34",  "E2 F12 F26 G2",   "E2 F15 F23 F24",
    "E2 F15 F24 G5",   "E2 F23 F26 G2",   "E2 F25 F34 G4",   "E3 E4 G1 G5",
    "E3 E4 G1 G6",     "E3 E4 G2 G5",     "E3 F24 F36 G4",   "E4 F14 F23 F45",
    "E3 F13 F24 F36",  "E3 F13 F35 G3",   "E3 F16 F23 F34",  "E3 F16 F23 F35",
    "E3 F16 F34 G6",   "E3 F23 F35 G3",   "E3 E6 G2 G4",     "E3 E6 G2 G5",
    "E4 F14 F23 F46",  "E4 F14 F45 G4",   "E4 F14 F46 G4",   "E4 F24 F45 G4",
    "E4 F34 F46 G4",   "E5 F12 F35 F45",  "E5 F12 F35 F56",  "E5 F12 F45 G2",
    "E5 F15 F56 G5",   "E5 F35 F45 G5",   "E5 F35 F56 G5",   "E6 F13 F26 F46",
    "E6 F13 F26 F56",  "E6 F13 F56 G1",   "E6 F26 F46 G6",   "E6 F26 F56 G6",
    "E6 F36 F46 G6",   "F12 F14 F56 G1",  "F12 F15 F36 F46", "F12 F25 F34 F46",
    "F12 F26 F35 F45", "F12 F26 F45 G2",  "F13 F14 F26 F56", "F13 F14 F56 G1",
    "F13 F16 F24 F45", "F13 F16 F25 F45", "F13 F24 F36 F45", "F13 F25 F36 F45",
    "F13 F35 F46 G3",  "F14 F23 F35 F46", "F14 F25 F46 G4",  "F15 F23 F24 F56",
    "F15 F23 F34 F56", "F15 F24 F56 G5",  "F15 F26 F46 G6",  "F15 F36 F46 G6",
    "F16 F23 F34 F56", "F16 F25 F45 G5",  "F16 F34 F56 G6",  "F23 F26 F45 G2",
    "F23 F35 F46 G3",  "F24 F35 F56 G5",  "F24 F36 F45 G4",  "F25 F34 F46 G4",
    "E3 F24 G2 G4",    "E2 F34 G3 G4",    "E2 F15 G1 G5",    "E1 F25 G2 G5",
    "E3 F16 G1 G6",    "E1 F36 G3 G6"};

const std::array<const char*, 30> e6_census_pentagons = {
    "E1 E5 F12 F15 G1",   "E1 E5 F15 G1 G6",    "E1 E5 F25 G2 G4",
    "E1 E6 F13 F16 G1",   "E1 F13 F14 F25 F36", "E2 E4 F23 F24 G2",
    "E2 E4 F24 G2 G5",    "E2 E5 F12 F25 G2",   "E2 F15 F23 F26 F34",
    "E3 E4 F23 F34 G3",   "E3 E4 F34 G3 G6",    "E3 E6 F13 F36 G3",
    "E3 E6 F16 G1 G5",    "E3 E6 F36 G3 G4",    "E3 F13 F16 F24 F35",
    "E4 F23 F24 F45 G2",  "E4 F23 F34 F46 G3",  "E5 F12 F15 F56 G1",
    "E5 F25 F45 G2 G5",   "E6 F13 F36 F46 G3",  "E6 F16 F56 G1 G6",
    "F12 F14 F25 F36 F46", "F12 F14 F26 F35 F56", "F12 F15 F26 F34 F46",
    "F13 F14 F26 F35 F46", "F14 F23 F26 F35 F45", "F14 F25 F36 F45 G4",
    "F15 F26 F34 F56 G6",  "F16 F23 F24 F35 F56", "F16 F24 F35 F45 G5"};

const std::array<const char*, 12> e6_triangle_free_double_six = {
    "E1", "E2", "E3", "F45", "F46", "F56",
    "F23", "F13", "F12", "G6", "G5", "G4"};

const std::array<int, 12> e6_double_six_pentagon_counts = {
    5, 4, 6, 5, 5, 5, 7, 6, 6, 4, 4, 3};

const std::array<std::array<int, 7>, 3> septic_point_matrix = {{
    {3, -26, 13, 21, -13, -23, 1},
    {4, 24, -4, 24, -29, -23, -28},
    {-18, -15, -27, -25, -4, 12, -29},
}};

}  // namespace pezzo::fixtures
