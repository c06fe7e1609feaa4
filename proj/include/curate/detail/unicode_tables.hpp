// Generated by tools/gen_unicode_tables.py (unicodedata 13.0.0). Do not edit.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace curate::detail {

struct CodepointRange {
  char32_t first;
  char32_t last;
};

struct LowerMapping {
  char32_t from;
  std::string_view to;
};

// Letter (L*) and number (N*) categories, non-ASCII part included.
inline constexpr std::array<CodepointRange, 706> kWordRanges{{
    {0x30, 0x39},
    {0x41, 0x5A},
    {0x61, 0x7A},
    {0xAA, 0xAA},
    {0xB2, 0xB3},
    {0xB5, 0xB5},
    {0xB9, 0xBA},
    {0xBC, 0xBE},
    {0xC0, 0xD6},
    {0xD8, 0xF6},
    {0xF8, 0x2C1},
    {0x2C6, 0x2D1},
    {0x2E0, 0x2E4},
    {0x2EC, 0x2EC},
    {0x2EE, 0x2EE},
    {0x370, 0x374},
    {0x376, 0x377},
    {0x37A, 0x37D},
    {0x37F, 0x37F},
    {0x386, 0x386},
    {0x388, 0x38A},
    {0x38C, 0x38C},
    {0x38E, 0x3A1},
    {0x3A3, 0x3F5},
    {0x3F7, 0x481},
    {0x48A, 0x52F},
    {0x531, 0x556},
    {0x559, 0x559},
    {0x560, 0x588},
    {0x5D0, 0x5EA},
    {0x5EF, 0x5F2},
    {0x620, 0x64A},
    {0x660, 0x669},
    {0x66E, 0x66F},
    {0x671, 0x6D3},
    {0x6D5, 0x6D5},
    {0x6E5, 0x6E6},
    {0x6EE, 0x6FC},
    {0x6FF, 0x6FF},
    {0x710, 0x710},
    {0x712, 0x72F},
    {0x74D, 0x7A5},
    {0x7B1, 0x7B1},
    {0x7C0, 0x7EA},
    {0x7F4, 0x7F5},
    {0x7FA, 0x7FA},
    {0x800, 0x815},
    {0x81A, 0x81A},
    {0x824, 0x824},
    {0x828, 0x828},
    {0x840, 0x858},
    {0x860, 0x86A},
    {0x8A0, 0x8B4},
    {0x8B6, 0x8C7},
    {0x904, 0x939},
    {0x93D, 0x93D},
    {0x950, 0x950},
    {0x958, 0x961},
    {0x966, 0x96F},
    {0x971, 0x980},
    {0x985, 0x98C},
    {0x98F, 0x990},
    {0x993, 0x9A8},
    {0x9AA, 0x9B0},
    {0x9B2, 0x9B2},
    {0x9B6, 0x9B9},
    {0x9BD, 0x9BD},
    {0x9CE, 0x9CE},
    {0x9DC, 0x9DD},
    {0x9DF, 0x9E1},
    {0x9E6, 0x9F1},
    {0x9F4, 0x9F9},
    {0x9FC, 0x9FC},
    {0xA05, 0xA0A},
    {0xA0F, 0xA10},
    {0xA13, 0xA28},
    {0xA2A, 0xA30},
    {0xA32, 0xA33},
    {0xA35, 0xA36},
    {0xA38, 0xA39},
    {0xA59, 0xA5C},
    {0xA5E, 0xA5E},
    {0xA66, 0xA6F},
    {0xA72, 0xA74},
    {0xA85, 0xA8D},
    {0xA8F, 0xA91},
    {0xA93, 0xAA8},
    {0xAAA, 0xAB0},
    {0xAB2, 0xAB3},
    {0xAB5, 0xAB9},
    {0xABD, 0xABD},
    {0xAD0, 0xAD0},
    {0xAE0, 0xAE1},
    {0xAE6, 0xAEF},
    {0xAF9, 0xAF9},
    {0xB05, 0xB0C},
    {0xB0F, 0xB10},
    {0xB13, 0xB28},
    {0xB2A, 0xB30},
    {0xB32, 0xB33},
    {0xB35, 0xB39},
    {0xB3D, 0xB3D},
    {0xB5C, 0xB5D},
    {0xB5F, 0xB61},
    {0xB66, 0xB6F},
    {0xB71, 0xB77},
    {0xB83, 0xB83},
    {0xB85, 0xB8A},
    {0xB8E, 0xB90},
    {0xB92, 0xB95},
    {0xB99, 0xB9A},
    {0xB9C, 0xB9C},
    {0xB9E, 0xB9F},
    {0xBA3, 0xBA4},
    {0xBA8, 0xBAA},
    {0xBAE, 0xBB9},
    {0xBD0, 0xBD0},
    {0xBE6, 0xBF2},
    {0xC05, 0xC0C},
    {0xC0E, 0xC10},
    {0xC12, 0xC28},
    {0xC2A, 0xC39},
    {0xC3D, 0xC3D},
    {0xC58, 0xC5A},
    {0xC60, 0xC61},
    {0xC66, 0xC6F},
    {0xC78, 0xC7E},
    {0xC80, 0xC80},
    {0xC85, 0xC8C},
    {0xC8E, 0xC90},
    {0xC92, 0xCA8},
    {0xCAA, 0xCB3},
    {0xCB5, 0xCB9},
    {0xCBD, 0xCBD},
    {0xCDE, 0xCDE},
    {0xCE0, 0xCE1},
    {0xCE6, 0xCEF},
    {0xCF1, 0xCF2},
    {0xD04, 0xD0C},
    {0xD0E, 0xD10},
    {0xD12, 0xD3A},
    {0xD3D, 0xD3D},
    {0xD4E, 0xD4E},
    {0xD54, 0xD56},
    {0xD58, 0xD61},
    {0xD66, 0xD78},
    {0xD7A, 0xD7F},
    {0xD85, 0xD96},
    {0xD9A, 0xDB1},
    {0xDB3, 0xDBB},
    {0xDBD, 0xDBD},
    {0xDC0, 0xDC6},
    {0xDE6, 0xDEF},
    {0xE01, 0xE30},
    {0xE32, 0xE33},
    {0xE40, 0xE46},
    {0xE50, 0xE59},
    {0xE81, 0xE82},
    {0xE84, 0xE84},
    {0xE86, 0xE8A},
    {0xE8C, 0xEA3},
    {0xEA5, 0xEA5},
    {0xEA7, 0xEB0},
    {0xEB2, 0xEB3},
    {0xEBD, 0xEBD},
    {0xEC0, 0xEC4},
    {0xEC6, 0xEC6},
    {0xED0, 0xED9},
    {0xEDC, 0xEDF},
    {0xF00, 0xF00},
    {0xF20, 0xF33},
    {0xF40, 0xF47},
    {0xF49, 0xF6C},
    {0xF88, 0xF8C},
    {0x1000, 0x102A},
    {0x103F, 0x1049},
    {0x1050, 0x1055},
    {0x105A, 0x105D},
    {0x1061, 0x1061},
    {0x1065, 0x1066},
    {0x106E, 0x1070},
    {0x1075, 0x1081},
    {0x108E, 0x108E},
    {0x1090, 0x1099},
    {0x10A0, 0x10C5},
    {0x10C7, 0x10C7},
    {0x10CD, 0x10CD},
    {0x10D0, 0x10FA},
    {0x10FC, 0x1248},
    {0x124A, 0x124D},
    {0x1250, 0x1256},
    {0x1258, 0x1258},
    {0x125A, 0x125D},
    {0x1260, 0x1288},
    {0x128A, 0x128D},
    {0x1290, 0x12B0},
    {0x12B2, 0x12B5},
    {0x12B8, 0x12BE},
    {0x12C0, 0x12C0},
    {0x12C2, 0x12C5},
    {0x12C8, 0x12D6},
    {0x12D8, 0x1310},
    {0x1312, 0x1315},
    {0x1318, 0x135A},
    {0x1369, 0x137C},
    {0x1380, 0x138F},
    {0x13A0, 0x13F5},
    {0x13F8, 0x13FD},
    {0x1401, 0x166C},
    {0x166F, 0x167F},
    {0x1681, 0x169A},
    {0x16A0, 0x16EA},
    {0x16EE, 0x16F8},
    {0x1700, 0x170C},
    {0x170E, 0x1711},
    {0x1720, 0x1731},
    {0x1740, 0x1751},
    {0x1760, 0x176C},
    {0x176E, 0x1770},
    {0x1780, 0x17B3},
    {0x17D7, 0x17D7},
    {0x17DC, 0x17DC},
    {0x17E0, 0x17E9},
    {0x17F0, 0x17F9},
    {0x1810, 0x1819},
    {0x1820, 0x1878},
    {0x1880, 0x1884},
    {0x1887, 0x18A8},
    {0x18AA, 0x18AA},
    {0x18B0, 0x18F5},
    {0x1900, 0x191E},
    {0x1946, 0x196D},
    {0x1970, 0x1974},
    {0x1980, 0x19AB},
    {0x19B0, 0x19C9},
    {0x19D0, 0x19DA},
    {0x1A00, 0x1A16},
    {0x1A20, 0x1A54},
    {0x1A80, 0x1A89},
    {0x1A90, 0x1A99},
    {0x1AA7, 0x1AA7},
    {0x1B05, 0x1B33},
    {0x1B45, 0x1B4B},
    {0x1B50, 0x1B59},
    {0x1B83, 0x1BA0},
    {0x1BAE, 0x1BE5},
    {0x1C00, 0x1C23},
    {0x1C40, 0x1C49},
    {0x1C4D, 0x1C7D},
    {0x1C80, 0x1C88},
    {0x1C90, 0x1CBA},
    {0x1CBD, 0x1CBF},
    {0x1CE9, 0x1CEC},
    {0x1CEE, 0x1CF3},
    {0x1CF5, 0x1CF6},
    {0x1CFA, 0x1CFA},
    {0x1D00, 0x1DBF},
    {0x1E00, 0x1F15},
    {0x1F18, 0x1F1D},
    {0x1F20, 0x1F45},
    {0x1F48, 0x1F4D},
    {0x1F50, 0x1F57},
    {0x1F59, 0x1F59},
    {0x1F5B, 0x1F5B},
    {0x1F5D, 0x1F5D},
    {0x1F5F, 0x1F7D},
    {0x1F80, 0x1FB4},
    {0x1FB6, 0x1FBC},
    {0x1FBE, 0x1FBE},
    {0x1FC2, 0x1FC4},
    {0x1FC6, 0x1FCC},
    {0x1FD0, 0x1FD3},
    {0x1FD6, 0x1FDB},
    {0x1FE0, 0x1FEC},
    {0x1FF2, 0x1FF4},
    {0x1FF6, 0x1FFC},
    {0x2070, 0x2071},
    {0x2074, 0x2079},
    {0x207F, 0x2089},
    {0x2090, 0x209C},
    {0x2102, 0x2102},
    {0x2107, 0x2107},
    {0x210A, 0x2113},
    {0x2115, 0x2115},
    {0x2119, 0x211D},
    {0x2124, 0x2124},
    {0x2126, 0x2126},
    {0x2128, 0x2128},
    {0x212A, 0x212D},
    {0x212F, 0x2139},
    {0x213C, 0x213F},
    {0x2145, 0x2149},
    {0x214E, 0x214E},
    {0x2150, 0x2189},
    {0x2460, 0x249B},
    {0x24EA, 0x24FF},
    {0x2776, 0x2793},
    {0x2C00, 0x2C2E},
    {0x2C30, 0x2C5E},
    {0x2C60, 0x2CE4},
    {0x2CEB, 0x2CEE},
    {0x2CF2, 0x2CF3},
    {0x2CFD, 0x2CFD},
    {0x2D00, 0x2D25},
    {0x2D27, 0x2D27},
    {0x2D2D, 0x2D2D},
    {0x2D30, 0x2D67},
    {0x2D6F, 0x2D6F},
    {0x2D80, 0x2D96},
    {0x2DA0, 0x2DA6},
    {0x2DA8, 0x2DAE},
    {0x2DB0, 0x2DB6},
    {0x2DB8, 0x2DBE},
    {0x2DC0, 0x2DC6},
    {0x2DC8, 0x2DCE},
    {0x2DD0, 0x2DD6},
    {0x2DD8, 0x2DDE},
    {0x2E2F, 0x2E2F},
    {0x3005, 0x3007},
    {0x3021, 0x3029},
    {0x3031, 0x3035},
    {0x3038, 0x303C},
    {0x3041, 0x3096},
    {0x309D, 0x309F},
    {0x30A1, 0x30FA},
    {0x30FC, 0x30FF},
    {0x3105, 0x312F},
    {0x3131, 0x318E},
    {0x3192, 0x3195},
    {0x31A0, 0x31BF},
    {0x31F0, 0x31FF},
    {0x3220, 0x3229},
    {0x3248, 0x324F},
    {0x3251, 0x325F},
    {0x3280, 0x3289},
    {0x32B1, 0x32BF},
    {0x3400, 0x4DBF},
    {0x4E00, 0x9FFC},
    {0xA000, 0xA48C},
    {0xA4D0, 0xA4FD},
    {0xA500, 0xA60C},
    {0xA610, 0xA62B},
    {0xA640, 0xA66E},
    {0xA67F, 0xA69D},
    {0xA6A0, 0xA6EF},
    {0xA717, 0xA71F},
    {0xA722, 0xA788},
    {0xA78B, 0xA7BF},
    {0xA7C2, 0xA7CA},
    {0xA7F5, 0xA801},
    {0xA803, 0xA805},
    {0xA807, 0xA80A},
    {0xA80C, 0xA822},
    {0xA830, 0xA835},
    {0xA840, 0xA873},
    {0xA882, 0xA8B3},
    {0xA8D0, 0xA8D9},
    {0xA8F2, 0xA8F7},
    {0xA8FB, 0xA8FB},
    {0xA8FD, 0xA8FE},
    {0xA900, 0xA925},
    {0xA930, 0xA946},
    {0xA960, 0xA97C},
    {0xA984, 0xA9B2},
    {0xA9CF, 0xA9D9},
    {0xA9E0, 0xA9E4},
    {0xA9E6, 0xA9FE},
    {0xAA00, 0xAA28},
    {0xAA40, 0xAA42},
    {0xAA44, 0xAA4B},
    {0xAA50, 0xAA59},
    {0xAA60, 0xAA76},
    {0xAA7A, 0xAA7A},
    {0xAA7E, 0xAAAF},
    {0xAAB1, 0xAAB1},
    {0xAAB5, 0xAAB6},
    {0xAAB9, 0xAABD},
    {0xAAC0, 0xAAC0},
    {0xAAC2, 0xAAC2},
    {0xAADB, 0xAADD},
    {0xAAE0, 0xAAEA},
    {0xAAF2, 0xAAF4},
    {0xAB01, 0xAB06},
    {0xAB09, 0xAB0E},
    {0xAB11, 0xAB16},
    {0xAB20, 0xAB26},
    {0xAB28, 0xAB2E},
    {0xAB30, 0xAB5A},
    {0xAB5C, 0xAB69},
    {0xAB70, 0xABE2},
    {0xABF0, 0xABF9},
    {0xAC00, 0xD7A3},
    {0xD7B0, 0xD7C6},
    {0xD7CB, 0xD7FB},
    {0xF900, 0xFA6D},
    {0xFA70, 0xFAD9},
    {0xFB00, 0xFB06},
    {0xFB13, 0xFB17},
    {0xFB1D, 0xFB1D},
    {0xFB1F, 0xFB28},
    {0xFB2A, 0xFB36},
    {0xFB38, 0xFB3C},
    {0xFB3E, 0xFB3E},
    {0xFB40, 0xFB41},
    {0xFB43, 0xFB44},
    {0xFB46, 0xFBB1},
    {0xFBD3, 0xFD3D},
    {0xFD50, 0xFD8F},
    {0xFD92, 0xFDC7},
    {0xFDF0, 0xFDFB},
    {0xFE70, 0xFE74},
    {0xFE76, 0xFEFC},
    {0xFF10, 0xFF19},
    {0xFF21, 0xFF3A},
    {0xFF41, 0xFF5A},
    {0xFF66, 0xFFBE},
    {0xFFC2, 0xFFC7},
    {0xFFCA, 0xFFCF},
    {0xFFD2, 0xFFD7},
    {0xFFDA, 0xFFDC},
    {0x10000, 0x1000B},
    {0x1000D, 0x10026},
    {0x10028, 0x1003A},
    {0x1003C, 0x1003D},
    {0x1003F, 0x1004D},
    {0x10050, 0x1005D},
    {0x10080, 0x100FA},
    {0x10107, 0x10133},
    {0x10140, 0x10178},
    {0x1018A, 0x1018B},
    {0x10280, 0x1029C},
    {0x102A0, 0x102D0},
    {0x102E1, 0x102FB},
    {0x10300, 0x10323},
    {0x1032D, 0x1034A},
    {0x10350, 0x10375},
    {0x10380, 0x1039D},
    {0x103A0, 0x103C3},
    {0x103C8, 0x103CF},
    {0x103D1, 0x103D5},
    {0x10400, 0x1049D},
    {0x104A0, 0x104A9},
    {0x104B0, 0x104D3},
    {0x104D8, 0x104FB},
    {0x10500, 0x10527},
    {0x10530, 0x10563},
    {0x10600, 0x10736},
    {0x10740, 0x10755},
    {0x10760, 0x10767},
    {0x10800, 0x10805},
    {0x10808, 0x10808},
    {0x1080A, 0x10835},
    {0x10837, 0x10838},
    {0x1083C, 0x1083C},
    {0x1083F, 0x10855},
    {0x10858, 0x10876},
    {0x10879, 0x1089E},
    {0x108A7, 0x108AF},
    {0x108E0, 0x108F2},
    {0x108F4, 0x108F5},
    {0x108FB, 0x1091B},
    {0x10920, 0x10939},
    {0x10980, 0x109B7},
    {0x109BC, 0x109CF},
    {0x109D2, 0x10A00},
    {0x10A10, 0x10A13},
    {0x10A15, 0x10A17},
    {0x10A19, 0x10A35},
    {0x10A40, 0x10A48},
    {0x10A60, 0x10A7E},
    {0x10A80, 0x10A9F},
    {0x10AC0, 0x10AC7},
    {0x10AC9, 0x10AE4},
    {0x10AEB, 0x10AEF},
    {0x10B00, 0x10B35},
    {0x10B40, 0x10B55},
    {0x10B58, 0x10B72},
    {0x10B78, 0x10B91},
    {0x10BA9, 0x10BAF},
    {0x10C00, 0x10C48},
    {0x10C80, 0x10CB2},
    {0x10CC0, 0x10CF2},
    {0x10CFA, 0x10D23},
    {0x10D30, 0x10D39},
    {0x10E60, 0x10E7E},
    {0x10E80, 0x10EA9},
    {0x10EB0, 0x10EB1},
    {0x10F00, 0x10F27},
    {0x10F30, 0x10F45},
    {0x10F51, 0x10F54},
    {0x10FB0, 0x10FCB},
    {0x10FE0, 0x10FF6},
    {0x11003, 0x11037},
    {0x11052, 0x1106F},
    {0x11083, 0x110AF},
    {0x110D0, 0x110E8},
    {0x110F0, 0x110F9},
    {0x11103, 0x11126},
    {0x11136, 0x1113F},
    {0x11144, 0x11144},
    {0x11147, 0x11147},
    {0x11150, 0x11172},
    {0x11176, 0x11176},
    {0x11183, 0x111B2},
    {0x111C1, 0x111C4},
    {0x111D0, 0x111DA},
    {0x111DC, 0x111DC},
    {0x111E1, 0x111F4},
    {0x11200, 0x11211},
    {0x11213, 0x1122B},
    {0x11280, 0x11286},
    {0x11288, 0x11288},
    {0x1128A, 0x1128D},
    {0x1128F, 0x1129D},
    {0x1129F, 0x112A8},
    {0x112B0, 0x112DE},
    {0x112F0, 0x112F9},
    {0x11305, 0x1130C},
    {0x1130F, 0x11310},
    {0x11313, 0x11328},
    {0x1132A, 0x11330},
    {0x11332, 0x11333},
    {0x11335, 0x11339},
    {0x1133D, 0x1133D},
    {0x11350, 0x11350},
    {0x1135D, 0x11361},
    {0x11400, 0x11434},
    {0x11447, 0x1144A},
    {0x11450, 0x11459},
    {0x1145F, 0x11461},
    {0x11480, 0x114AF},
    {0x114C4, 0x114C5},
    {0x114C7, 0x114C7},
    {0x114D0, 0x114D9},
    {0x11580, 0x115AE},
    {0x115D8, 0x115DB},
    {0x11600, 0x1162F},
    {0x11644, 0x11644},
    {0x11650, 0x11659},
    {0x11680, 0x116AA},
    {0x116B8, 0x116B8},
    {0x116C0, 0x116C9},
    {0x11700, 0x1171A},
    {0x11730, 0x1173B},
    {0x11800, 0x1182B},
    {0x118A0, 0x118F2},
    {0x118FF, 0x11906},
    {0x11909, 0x11909},
    {0x1190C, 0x11913},
    {0x11915, 0x11916},
    {0x11918, 0x1192F},
    {0x1193F, 0x1193F},
    {0x11941, 0x11941},
    {0x11950, 0x11959},
    {0x119A0, 0x119A7},
    {0x119AA, 0x119D0},
    {0x119E1, 0x119E1},
    {0x119E3, 0x119E3},
    {0x11A00, 0x11A00},
    {0x11A0B, 0x11A32},
    {0x11A3A, 0x11A3A},
    {0x11A50, 0x11A50},
    {0x11A5C, 0x11A89},
    {0x11A9D, 0x11A9D},
    {0x11AC0, 0x11AF8},
    {0x11C00, 0x11C08},
    {0x11C0A, 0x11C2E},
    {0x11C40, 0x11C40},
    {0x11C50, 0x11C6C},
    {0x11C72, 0x11C8F},
    {0x11D00, 0x11D06},
    {0x11D08, 0x11D09},
    {0x11D0B, 0x11D30},
    {0x11D46, 0x11D46},
    {0x11D50, 0x11D59},
    {0x11D60, 0x11D65},
    {0x11D67, 0x11D68},
    {0x11D6A, 0x11D89},
    {0x11D98, 0x11D98},
    {0x11DA0, 0x11DA9},
    {0x11EE0, 0x11EF2},
    {0x11FB0, 0x11FB0},
    {0x11FC0, 0x11FD4},
    {0x12000, 0x12399},
    {0x12400, 0x1246E},
    {0x12480, 0x12543},
    {0x13000, 0x1342E},
    {0x14400, 0x14646},
    {0x16800, 0x16A38},
    {0x16A40, 0x16A5E},
    {0x16A60, 0x16A69},
    {0x16AD0, 0x16AED},
    {0x16B00, 0x16B2F},
    {0x16B40, 0x16B43},
    {0x16B50, 0x16B59},
    {0x16B5B, 0x16B61},
    {0x16B63, 0x16B77},
    {0x16B7D, 0x16B8F},
    {0x16E40, 0x16E96},
    {0x16F00, 0x16F4A},
    {0x16F50, 0x16F50},
    {0x16F93, 0x16F9F},
    {0x16FE0, 0x16FE1},
    {0x16FE3, 0x16FE3},
    {0x17000, 0x187F7},
    {0x18800, 0x18CD5},
    {0x18D00, 0x18D08},
    {0x1B000, 0x1B11E},
    {0x1B150, 0x1B152},
    {0x1B164, 0x1B167},
    {0x1B170, 0x1B2FB},
    {0x1BC00, 0x1BC6A},
    {0x1BC70, 0x1BC7C},
    {0x1BC80, 0x1BC88},
    {0x1BC90, 0x1BC99},
    {0x1D2E0, 0x1D2F3},
    {0x1D360, 0x1D378},
    {0x1D400, 0x1D454},
    {0x1D456, 0x1D49C},
    {0x1D49E, 0x1D49F},
    {0x1D4A2, 0x1D4A2},
    {0x1D4A5, 0x1D4A6},
    {0x1D4A9, 0x1D4AC},
    {0x1D4AE, 0x1D4B9},
    {0x1D4BB, 0x1D4BB},
    {0x1D4BD, 0x1D4C3},
    {0x1D4C5, 0x1D505},
    {0x1D507, 0x1D50A},
    {0x1D50D, 0x1D514},
    {0x1D516, 0x1D51C},
    {0x1D51E, 0x1D539},
    {0x1D53B, 0x1D53E},
    {0x1D540, 0x1D544},
    {0x1D546, 0x1D546},
    {0x1D54A, 0x1D550},
    {0x1D552, 0x1D6A5},
    {0x1D6A8, 0x1D6C0},
    {0x1D6C2, 0x1D6DA},
    {0x1D6DC, 0x1D6FA},
    {0x1D6FC, 0x1D714},
    {0x1D716, 0x1D734},
    {0x1D736, 0x1D74E},
    {0x1D750, 0x1D76E},
    {0x1D770, 0x1D788},
    {0x1D78A, 0x1D7A8},
    {0x1D7AA, 0x1D7C2},
    {0x1D7C4, 0x1D7CB},
    {0x1D7CE, 0x1D7FF},
    {0x1E100, 0x1E12C},
    {0x1E137, 0x1E13D},
    {0x1E140, 0x1E149},
    {0x1E14E, 0x1E14E},
    {0x1E2C0, 0x1E2EB},
    {0x1E2F0, 0x1E2F9},
    {0x1E800, 0x1E8C4},
    {0x1E8C7, 0x1E8CF},
    {0x1E900, 0x1E943},
    {0x1E94B, 0x1E94B},
    {0x1E950, 0x1E959},
    {0x1EC71, 0x1ECAB},
    {0x1ECAD, 0x1ECAF},
    {0x1ECB1, 0x1ECB4},
    {0x1ED01, 0x1ED2D},
    {0x1ED2F, 0x1ED3D},
    {0x1EE00, 0x1EE03},
    {0x1EE05, 0x1EE1F},
    {0x1EE21, 0x1EE22},
    {0x1EE24, 0x1EE24},
    {0x1EE27, 0x1EE27},
    {0x1EE29, 0x1EE32},
    {0x1EE34, 0x1EE37},
    {0x1EE39, 0x1EE39},
    {0x1EE3B, 0x1EE3B},
    {0x1EE42, 0x1EE42},
    {0x1EE47, 0x1EE47},
    {0x1EE49, 0x1EE49},
    {0x1EE4B, 0x1EE4B},
    {0x1EE4D, 0x1EE4F},
    {0x1EE51, 0x1EE52},
    {0x1EE54, 0x1EE54},
    {0x1EE57, 0x1EE57},
    {0x1EE59, 0x1EE59},
    {0x1EE5B, 0x1EE5B},
    {0x1EE5D, 0x1EE5D},
    {0x1EE5F, 0x1EE5F},
    {0x1EE61, 0x1EE62},
    {0x1EE64, 0x1EE64},
    {0x1EE67, 0x1EE6A},
    {0x1EE6C, 0x1EE72},
    {0x1EE74, 0x1EE77},
    {0x1EE79, 0x1EE7C},
    {0x1EE7E, 0x1EE7E},
    {0x1EE80, 0x1EE89},
    {0x1EE8B, 0x1EE9B},
    {0x1EEA1, 0x1EEA3},
    {0x1EEA5, 0x1EEA9},
    {0x1EEAB, 0x1EEBB},
    {0x1F100, 0x1F10C},
    {0x1FBF0, 0x1FBF9},
    {0x20000, 0x2A6DD},
    {0x2A700, 0x2B734},
    {0x2B740, 0x2B81D},
    {0x2B820, 0x2CEA1},
    {0x2CEB0, 0x2EBE0},
    {0x2F800, 0x2FA1D},
    {0x30000, 0x3134A},
}};

// Full lowercase mapping for non-ASCII word characters, sorted by codepoint.
inline constexpr std::array<LowerMapping, 1341> kLowerMappings{{
    {0xC0, "\xC3\xA0"},
    {0xC1, "\xC3\xA1"},
    {0xC2, "\xC3\xA2"},
    {0xC3, "\xC3\xA3"},
    {0xC4, "\xC3\xA4"},
    {0xC5, "\xC3\xA5"},
    {0xC6, "\xC3\xA6"},
    {0xC7, "\xC3\xA7"},
    {0xC8, "\xC3\xA8"},
    {0xC9, "\xC3\xA9"},
    {0xCA, "\xC3\xAA"},
    {0xCB, "\xC3\xAB"},
    {0xCC, "\xC3\xAC"},
    {0xCD, "\xC3\xAD"},
    {0xCE, "\xC3\xAE"},
    {0xCF, "\xC3\xAF"},
    {0xD0, "\xC3\xB0"},
    {0xD1, "\xC3\xB1"},
    {0xD2, "\xC3\xB2"},
    {0xD3, "\xC3\xB3"},
    {0xD4, "\xC3\xB4"},
    {0xD5, "\xC3\xB5"},
    {0xD6, "\xC3\xB6"},
    {0xD8, "\xC3\xB8"},
    {0xD9, "\xC3\xB9"},
    {0xDA, "\xC3\xBA"},
    {0xDB, "\xC3\xBB"},
    {0xDC, "\xC3\xBC"},
    {0xDD, "\xC3\xBD"},
    {0xDE, "\xC3\xBE"},
    {0x100, "\xC4\x81"},
    {0x102, "\xC4\x83"},
    {0x104, "\xC4\x85"},
    {0x106, "\xC4\x87"},
    {0x108, "\xC4\x89"},
    {0x10A, "\xC4\x8B"},
    {0x10C, "\xC4\x8D"},
    {0x10E, "\xC4\x8F"},
    {0x110, "\xC4\x91"},
    {0x112, "\xC4\x93"},
    {0x114, "\xC4\x95"},
    {0x116, "\xC4\x97"},
    {0x118, "\xC4\x99"},
    {0x11A, "\xC4\x9B"},
    {0x11C, "\xC4\x9D"},
    {0x11E, "\xC4\x9F"},
    {0x120, "\xC4\xA1"},
    {0x122, "\xC4\xA3"},
    {0x124, "\xC4\xA5"},
    {0x126, "\xC4\xA7"},
    {0x128, "\xC4\xA9"},
    {0x12A, "\xC4\xAB"},
    {0x12C, "\xC4\xAD"},
    {0x12E, "\xC4\xAF"},
    {0x130, "\x69\xCC\x87"},
    {0x132, "\xC4\xB3"},
    {0x134, "\xC4\xB5"},
    {0x136, "\xC4\xB7"},
    {0x139, "\xC4\xBA"},
    {0x13B, "\xC4\xBC"},
    {0x13D, "\xC4\xBE"},
    {0x13F, "\xC5\x80"},
    {0x141, "\xC5\x82"},
    {0x143, "\xC5\x84"},
    {0x145, "\xC5\x86"},
    {0x147, "\xC5\x88"},
    {0x14A, "\xC5\x8B"},
    {0x14C, "\xC5\x8D"},
    {0x14E, "\xC5\x8F"},
    {0x150, "\xC5\x91"},
    {0x152, "\xC5\x93"},
    {0x154, "\xC5\x95"},
    {0x156, "\xC5\x97"},
    {0x158, "\xC5\x99"},
    {0x15A, "\xC5\x9B"},
    {0x15C, "\xC5\x9D"},
    {0x15E, "\xC5\x9F"},
    {0x160, "\xC5\xA1"},
    {0x162, "\xC5\xA3"},
    {0x164, "\xC5\xA5"},
    {0x166, "\xC5\xA7"},
    {0x168, "\xC5\xA9"},
    {0x16A, "\xC5\xAB"},
    {0x16C, "\xC5\xAD"},
    {0x16E, "\xC5\xAF"},
    {0x170, "\xC5\xB1"},
    {0x172, "\xC5\xB3"},
    {0x174, "\xC5\xB5"},
    {0x176, "\xC5\xB7"},
    {0x178, "\xC3\xBF"},
    {0x179, "\xC5\xBA"},
    {0x17B, "\xC5\xBC"},
    {0x17D, "\xC5\xBE"},
    {0x181, "\xC9\x93"},
    {0x182, "\xC6\x83"},
    {0x184, "\xC6\x85"},
    {0x186, "\xC9\x94"},
    {0x187, "\xC6\x88"},
    {0x189, "\xC9\x96"},
    {0x18A, "\xC9\x97"},
    {0x18B, "\xC6\x8C"},
    {0x18E, "\xC7\x9D"},
    {0x18F, "\xC9\x99"},
    {0x190, "\xC9\x9B"},
    {0x191, "\xC6\x92"},
    {0x193, "\xC9\xA0"},
    {0x194, "\xC9\xA3"},
    {0x196, "\xC9\xA9"},
    {0x197, "\xC9\xA8"},
    {0x198, "\xC6\x99"},
    {0x19C, "\xC9\xAF"},
    {0x19D, "\xC9\xB2"},
    {0x19F, "\xC9\xB5"},
    {0x1A0, "\xC6\xA1"},
    {0x1A2, "\xC6\xA3"},
    {0x1A4, "\xC6\xA5"},
    {0x1A6, "\xCA\x80"},
    {0x1A7, "\xC6\xA8"},
    {0x1A9, "\xCA\x83"},
    {0x1AC, "\xC6\xAD"},
    {0x1AE, "\xCA\x88"},
    {0x1AF, "\xC6\xB0"},
    {0x1B1, "\xCA\x8A"},
    {0x1B2, "\xCA\x8B"},
    {0x1B3, "\xC6\xB4"},
    {0x1B5, "\xC6\xB6"},
    {0x1B7, "\xCA\x92"},
    {0x1B8, "\xC6\xB9"},
    {0x1BC, "\xC6\xBD"},
    {0x1C4, "\xC7\x86"},
    {0x1C5, "\xC7\x86"},
    {0x1C7, "\xC7\x89"},
    {0x1C8, "\xC7\x89"},
    {0x1CA, "\xC7\x8C"},
    {0x1CB, "\xC7\x8C"},
    {0x1CD, "\xC7\x8E"},
    {0x1CF, "\xC7\x90"},
    {0x1D1, "\xC7\x92"},
    {0x1D3, "\xC7\x94"},
    {0x1D5, "\xC7\x96"},
    {0x1D7, "\xC7\x98"},
    {0x1D9, "\xC7\x9A"},
    {0x1DB, "\xC7\x9C"},
    {0x1DE, "\xC7\x9F"},
    {0x1E0, "\xC7\xA1"},
    {0x1E2, "\xC7\xA3"},
    {0x1E4, "\xC7\xA5"},
    {0x1E6, "\xC7\xA7"},
    {0x1E8, "\xC7\xA9"},
    {0x1EA, "\xC7\xAB"},
    {0x1EC, "\xC7\xAD"},
    {0x1EE, "\xC7\xAF"},
    {0x1F1, "\xC7\xB3"},
    {0x1F2, "\xC7\xB3"},
    {0x1F4, "\xC7\xB5"},
    {0x1F6, "\xC6\x95"},
    {0x1F7, "\xC6\xBF"},
    {0x1F8, "\xC7\xB9"},
    {0x1FA, "\xC7\xBB"},
    {0x1FC, "\xC7\xBD"},
    {0x1FE, "\xC7\xBF"},
    {0x200, "\xC8\x81"},
    {0x202, "\xC8\x83"},
    {0x204, "\xC8\x85"},
    {0x206, "\xC8\x87"},
    {0x208, "\xC8\x89"},
    {0x20A, "\xC8\x8B"},
    {0x20C, "\xC8\x8D"},
    {0x20E, "\xC8\x8F"},
    {0x210, "\xC8\x91"},
    {0x212, "\xC8\x93"},
    {0x214, "\xC8\x95"},
    {0x216, "\xC8\x97"},
    {0x218, "\xC8\x99"},
    {0x21A, "\xC8\x9B"},
    {0x21C, "\xC8\x9D"},
    {0x21E, "\xC8\x9F"},
    {0x220, "\xC6\x9E"},
    {0x222, "\xC8\xA3"},
    {0x224, "\xC8\xA5"},
    {0x226, "\xC8\xA7"},
    {0x228, "\xC8\xA9"},
    {0x22A, "\xC8\xAB"},
    {0x22C, "\xC8\xAD"},
    {0x22E, "\xC8\xAF"},
    {0x230, "\xC8\xB1"},
    {0x232, "\xC8\xB3"},
    {0x23A, "\xE2\xB1\xA5"},
    {0x23B, "\xC8\xBC"},
    {0x23D, "\xC6\x9A"},
    {0x23E, "\xE2\xB1\xA6"},
    {0x241, "\xC9\x82"},
    {0x243, "\xC6\x80"},
    {0x244, "\xCA\x89"},
    {0x245, "\xCA\x8C"},
    {0x246, "\xC9\x87"},
    {0x248, "\xC9\x89"},
    {0x24A, "\xC9\x8B"},
    {0x24C, "\xC9\x8D"},
    {0x24E, "\xC9\x8F"},
    {0x370, "\xCD\xB1"},
    {0x372, "\xCD\xB3"},
    {0x376, "\xCD\xB7"},
    {0x37F, "\xCF\xB3"},
    {0x386, "\xCE\xAC"},
    {0x388, "\xCE\xAD"},
    {0x389, "\xCE\xAE"},
    {0x38A, "\xCE\xAF"},
    {0x38C, "\xCF\x8C"},
    {0x38E, "\xCF\x8D"},
    {0x38F, "\xCF\x8E"},
    {0x391, "\xCE\xB1"},
    {0x392, "\xCE\xB2"},
    {0x393, "\xCE\xB3"},
    {0x394, "\xCE\xB4"},
    {0x395, "\xCE\xB5"},
    {0x396, "\xCE\xB6"},
    {0x397, "\xCE\xB7"},
    {0x398, "\xCE\xB8"},
    {0x399, "\xCE\xB9"},
    {0x39A, "\xCE\xBA"},
    {0x39B, "\xCE\xBB"},
    {0x39C, "\xCE\xBC"},
    {0x39D, "\xCE\xBD"},
    {0x39E, "\xCE\xBE"},
    {0x39F, "\xCE\xBF"},
    {0x3A0, "\xCF\x80"},
    {0x3A1, "\xCF\x81"},
    {0x3A3, "\xCF\x83"},
    {0x3A4, "\xCF\x84"},
    {0x3A5, "\xCF\x85"},
    {0x3A6, "\xCF\x86"},
    {0x3A7, "\xCF\x87"},
    {0x3A8, "\xCF\x88"},
    {0x3A9, "\xCF\x89"},
    {0x3AA, "\xCF\x8A"},
    {0x3AB, "\xCF\x8B"},
    {0x3CF, "\xCF\x97"},
    {0x3D8, "\xCF\x99"},
    {0x3DA, "\xCF\x9B"},
    {0x3DC, "\xCF\x9D"},
    {0x3DE, "\xCF\x9F"},
    {0x3E0, "\xCF\xA1"},
    {0x3E2, "\xCF\xA3"},
    {0x3E4, "\xCF\xA5"},
    {0x3E6, "\xCF\xA7"},
    {0x3E8, "\xCF\xA9"},
    {0x3EA, "\xCF\xAB"},
    {0x3EC, "\xCF\xAD"},
    {0x3EE, "\xCF\xAF"},
    {0x3F4, "\xCE\xB8"},
    {0x3F7, "\xCF\xB8"},
    {0x3F9, "\xCF\xB2"},
    {0x3FA, "\xCF\xBB"},
    {0x3FD, "\xCD\xBB"},
    {0x3FE, "\xCD\xBC"},
    {0x3FF, "\xCD\xBD"},
    {0x400, "\xD1\x90"},
    {0x401, "\xD1\x91"},
    {0x402, "\xD1\x92"},
    {0x403, "\xD1\x93"},
    {0x404, "\xD1\x94"},
    {0x405, "\xD1\x95"},
    {0x406, "\xD1\x96"},
    {0x407, "\xD1\x97"},
    {0x408, "\xD1\x98"},
    {0x409, "\xD1\x99"},
    {0x40A, "\xD1\x9A"},
    {0x40B, "\xD1\x9B"},
    {0x40C, "\xD1\x9C"},
    {0x40D, "\xD1\x9D"},
    {0x40E, "\xD1\x9E"},
    {0x40F, "\xD1\x9F"},
    {0x410, "\xD0\xB0"},
    {0x411, "\xD0\xB1"},
    {0x412, "\xD0\xB2"},
    {0x413, "\xD0\xB3"},
    {0x414, "\xD0\xB4"},
    {0x415, "\xD0\xB5"},
    {0x416, "\xD0\xB6"},
    {0x417, "\xD0\xB7"},
    {0x418, "\xD0\xB8"},
    {0x419, "\xD0\xB9"},
    {0x41A, "\xD0\xBA"},
    {0x41B, "\xD0\xBB"},
    {0x41C, "\xD0\xBC"},
    {0x41D, "\xD0\xBD"},
    {0x41E, "\xD0\xBE"},
    {0x41F, "\xD0\xBF"},
    {0x420, "\xD1\x80"},
    {0x421, "\xD1\x81"},
    {0x422, "\xD1\x82"},
    {0x423, "\xD1\x83"},
    {0x424, "\xD1\x84"},
    {0x425, "\xD1\x85"},
    {0x426, "\xD1\x86"},
    {0x427, "\xD1\x87"},
    {0x428, "\xD1\x88"},
    {0x429, "\xD1\x89"},
    {0x42A, "\xD1\x8A"},
    {0x42B, "\xD1\x8B"},
    {0x42C, "\xD1\x8C"},
    {0x42D, "\xD1\x8D"},
    {0x42E, "\xD1\x8E"},
    {0x42F, "\xD1\x8F"},
    {0x460, "\xD1\xA1"},
    {0x462, "\xD1\xA3"},
    {0x464, "\xD1\xA5"},
    {0x466, "\xD1\xA7"},
    {0x468, "\xD1\xA9"},
    {0x46A, "\xD1\xAB"},
    {0x46C, "\xD1\xAD"},
    {0x46E, "\xD1\xAF"},
    {0x470, "\xD1\xB1"},
    {0x472, "\xD1\xB3"},
    {0x474, "\xD1\xB5"},
    {0x476, "\xD1\xB7"},
    {0x478, "\xD1\xB9"},
    {0x47A, "\xD1\xBB"},
    {0x47C, "\xD1\xBD"},
    {0x47E, "\xD1\xBF"},
    {0x480, "\xD2\x81"},
    {0x48A, "\xD2\x8B"},
    {0x48C, "\xD2\x8D"},
    {0x48E, "\xD2\x8F"},
    {0x490, "\xD2\x91"},
    {0x492, "\xD2\x93"},
    {0x494, "\xD2\x95"},
    {0x496, "\xD2\x97"},
    {0x498, "\xD2\x99"},
    {0x49A, "\xD2\x9B"},
    {0x49C, "\xD2\x9D"},
    {0x49E, "\xD2\x9F"},
    {0x4A0, "\xD2\xA1"},
    {0x4A2, "\xD2\xA3"},
    {0x4A4, "\xD2\xA5"},
    {0x4A6, "\xD2\xA7"},
    {0x4A8, "\xD2\xA9"},
    {0x4AA, "\xD2\xAB"},
    {0x4AC, "\xD2\xAD"},
    {0x4AE, "\xD2\xAF"},
    {0x4B0, "\xD2\xB1"},
    {0x4B2, "\xD2\xB3"},
    {0x4B4, "\xD2\xB5"},
    {0x4B6, "\xD2\xB7"},
    {0x4B8, "\xD2\xB9"},
    {0x4BA, "\xD2\xBB"},
    {0x4BC, "\xD2\xBD"},
    {0x4BE, "\xD2\xBF"},
    {0x4C0, "\xD3\x8F"},
    {0x4C1, "\xD3\x82"},
    {0x4C3, "\xD3\x84"},
    {0x4C5, "\xD3\x86"},
    {0x4C7, "\xD3\x88"},
    {0x4C9, "\xD3\x8A"},
    {0x4CB, "\xD3\x8C"},
    {0x4CD, "\xD3\x8E"},
    {0x4D0, "\xD3\x91"},
    {0x4D2, "\xD3\x93"},
    {0x4D4, "\xD3\x95"},
    {0x4D6, "\xD3\x97"},
    {0x4D8, "\xD3\x99"},
    {0x4DA, "\xD3\x9B"},
    {0x4DC, "\xD3\x9D"},
    {0x4DE, "\xD3\x9F"},
    {0x4E0, "\xD3\xA1"},
    {0x4E2, "\xD3\xA3"},
    {0x4E4, "\xD3\xA5"},
    {0x4E6, "\xD3\xA7"},
    {0x4E8, "\xD3\xA9"},
    {0x4EA, "\xD3\xAB"},
    {0x4EC, "\xD3\xAD"},
    {0x4EE, "\xD3\xAF"},
    {0x4F0, "\xD3\xB1"},
    {0x4F2, "\xD3\xB3"},
    {0x4F4, "\xD3\xB5"},
    {0x4F6, "\xD3\xB7"},
    {0x4F8, "\xD3\xB9"},
    {0x4FA, "\xD3\xBB"},
    {0x4FC, "\xD3\xBD"},
    {0x4FE, "\xD3\xBF"},
    {0x500, "\xD4\x81"},
    {0x502, "\xD4\x83"},
    {0x504, "\xD4\x85"},
    {0x506, "\xD4\x87"},
    {0x508, "\xD4\x89"},
    {0x50A, "\xD4\x8B"},
    {0x50C, "\xD4\x8D"},
    {0x50E, "\xD4\x8F"},
    {0x510, "\xD4\x91"},
    {0x512, "\xD4\x93"},
    {0x514, "\xD4\x95"},
    {0x516, "\xD4\x97"},
    {0x518, "\xD4\x99"},
    {0x51A, "\xD4\x9B"},
    {0x51C, "\xD4\x9D"},
    {0x51E, "\xD4\x9F"},
    {0x520, "\xD4\xA1"},
    {0x522, "\xD4\xA3"},
    {0x524, "\xD4\xA5"},
    {0x526, "\xD4\xA7"},
    {0x528, "\xD4\xA9"},
    {0x52A, "\xD4\xAB"},
    {0x52C, "\xD4\xAD"},
    {0x52E, "\xD4\xAF"},
    {0x531, "\xD5\xA1"},
    {0x532, "\xD5\xA2"},
    {0x533, "\xD5\xA3"},
    {0x534, "\xD5\xA4"},
    {0x535, "\xD5\xA5"},
    {0x536, "\xD5\xA6"},
    {0x537, "\xD5\xA7"},
    {0x538, "\xD5\xA8"},
    {0x539, "\xD5\xA9"},
    {0x53A, "\xD5\xAA"},
    {0x53B, "\xD5\xAB"},
    {0x53C, "\xD5\xAC"},
    {0x53D, "\xD5\xAD"},
    {0x53E, "\xD5\xAE"},
    {0x53F, "\xD5\xAF"},
    {0x540, "\xD5\xB0"},
    {0x541, "\xD5\xB1"},
    {0x542, "\xD5\xB2"},
    {0x543, "\xD5\xB3"},
    {0x544, "\xD5\xB4"},
    {0x545, "\xD5\xB5"},
    {0x546, "\xD5\xB6"},
    {0x547, "\xD5\xB7"},
    {0x548, "\xD5\xB8"},
    {0x549, "\xD5\xB9"},
    {0x54A, "\xD5\xBA"},
    {0x54B, "\xD5\xBB"},
    {0x54C, "\xD5\xBC"},
    {0x54D, "\xD5\xBD"},
    {0x54E, "\xD5\xBE"},
    {0x54F, "\xD5\xBF"},
    {0x550, "\xD6\x80"},
    {0x551, "\xD6\x81"},
    {0x552, "\xD6\x82"},
    {0x553, "\xD6\x83"},
    {0x554, "\xD6\x84"},
    {0x555, "\xD6\x85"},
    {0x556, "\xD6\x86"},
    {0x10A0, "\xE2\xB4\x80"},
    {0x10A1, "\xE2\xB4\x81"},
    {0x10A2, "\xE2\xB4\x82"},
    {0x10A3, "\xE2\xB4\x83"},
    {0x10A4, "\xE2\xB4\x84"},
    {0x10A5, "\xE2\xB4\x85"},
    {0x10A6, "\xE2\xB4\x86"},
    {0x10A7, "\xE2\xB4\x87"},
    {0x10A8, "\xE2\xB4\x88"},
    {0x10A9, "\xE2\xB4\x89"},
    {0x10AA, "\xE2\xB4\x8A"},
    {0x10AB, "\xE2\xB4\x8B"},
    {0x10AC, "\xE2\xB4\x8C"},
    {0x10AD, "\xE2\xB4\x8D"},
    {0x10AE, "\xE2\xB4\x8E"},
    {0x10AF, "\xE2\xB4\x8F"},
    {0x10B0, "\xE2\xB4\x90"},
    {0x10B1, "\xE2\xB4\x91"},
    {0x10B2, "\xE2\xB4\x92"},
    {0x10B3, "\xE2\xB4\x93"},
    {0x10B4, "\xE2\xB4\x94"},
    {0x10B5, "\xE2\xB4\x95"},
    {0x10B6, "\xE2\xB4\x96"},
    {0x10B7, "\xE2\xB4\x97"},
    {0x10B8, "\xE2\xB4\x98"},
    {0x10B9, "\xE2\xB4\x99"},
    {0x10BA, "\xE2\xB4\x9A"},
    {0x10BB, "\xE2\xB4\x9B"},
    {0x10BC, "\xE2\xB4\x9C"},
    {0x10BD, "\xE2\xB4\x9D"},
    {0x10BE, "\xE2\xB4\x9E"},
    {0x10BF, "\xE2\xB4\x9F"},
    {0x10C0, "\xE2\xB4\xA0"},
    {0x10C1, "\xE2\xB4\xA1"},
    {0x10C2, "\xE2\xB4\xA2"},
    {0x10C3, "\xE2\xB4\xA3"},
    {0x10C4, "\xE2\xB4\xA4"},
    {0x10C5, "\xE2\xB4\xA5"},
    {0x10C7, "\xE2\xB4\xA7"},
    {0x10CD, "\xE2\xB4\xAD"},
    {0x13A0, "\xEA\xAD\xB0"},
    {0x13A1, "\xEA\xAD\xB1"},
    {0x13A2, "\xEA\xAD\xB2"},
    {0x13A3, "\xEA\xAD\xB3"},
    {0x13A4, "\xEA\xAD\xB4"},
    {0x13A5, "\xEA\xAD\xB5"},
    {0x13A6, "\xEA\xAD\xB6"},
    {0x13A7, "\xEA\xAD\xB7"},
    {0x13A8, "\xEA\xAD\xB8"},
    {0x13A9, "\xEA\xAD\xB9"},
    {0x13AA, "\xEA\xAD\xBA"},
    {0x13AB, "\xEA\xAD\xBB"},
    {0x13AC, "\xEA\xAD\xBC"},
    {0x13AD, "\xEA\xAD\xBD"},
    {0x13AE, "\xEA\xAD\xBE"},
    {0x13AF, "\xEA\xAD\xBF"},
    {0x13B0, "\xEA\xAE\x80"},
    {0x13B1, "\xEA\xAE\x81"},
    {0x13B2, "\xEA\xAE\x82"},
    {0x13B3, "\xEA\xAE\x83"},
    {0x13B4, "\xEA\xAE\x84"},
    {0x13B5, "\xEA\xAE\x85"},
    {0x13B6, "\xEA\xAE\x86"},
    {0x13B7, "\xEA\xAE\x87"},
    {0x13B8, "\xEA\xAE\x88"},
    {0x13B9, "\xEA\xAE\x89"},
    {0x13BA, "\xEA\xAE\x8A"},
    {0x13BB, "\xEA\xAE\x8B"},
    {0x13BC, "\xEA\xAE\x8C"},
    {0x13BD, "\xEA\xAE\x8D"},
    {0x13BE, "\xEA\xAE\x8E"},
    {0x13BF, "\xEA\xAE\x8F"},
    {0x13C0, "\xEA\xAE\x90"},
    {0x13C1, "\xEA\xAE\x91"},
    {0x13C2, "\xEA\xAE\x92"},
    {0x13C3, "\xEA\xAE\x93"},
    {0x13C4, "\xEA\xAE\x94"},
    {0x13C5, "\xEA\xAE\x95"},
    {0x13C6, "\xEA\xAE\x96"},
    {0x13C7, "\xEA\xAE\x97"},
    {0x13C8, "\xEA\xAE\x98"},
    {0x13C9, "\xEA\xAE\x99"},
    {0x13CA, "\xEA\xAE\x9A"},
    {0x13CB, "\xEA\xAE\x9B"},
    {0x13CC, "\xEA\xAE\x9C"},
    {0x13CD, "\xEA\xAE\x9D"},
    {0x13CE, "\xEA\xAE\x9E"},
    {0x13CF, "\xEA\xAE\x9F"},
    {0x13D0, "\xEA\xAE\xA0"},
    {0x13D1, "\xEA\xAE\xA1"},
    {0x13D2, "\xEA\xAE\xA2"},
    {0x13D3, "\xEA\xAE\xA3"},
    {0x13D4, "\xEA\xAE\xA4"},
    {0x13D5, "\xEA\xAE\xA5"},
    {0x13D6, "\xEA\xAE\xA6"},
    {0x13D7, "\xEA\xAE\xA7"},
    {0x13D8, "\xEA\xAE\xA8"},
    {0x13D9, "\xEA\xAE\xA9"},
    {0x13DA, "\xEA\xAE\xAA"},
    {0x13DB, "\xEA\xAE\xAB"},
    {0x13DC, "\xEA\xAE\xAC"},
    {0x13DD, "\xEA\xAE\xAD"},
    {0x13DE, "\xEA\xAE\xAE"},
    {0x13DF, "\xEA\xAE\xAF"},
    {0x13E0, "\xEA\xAE\xB0"},
    {0x13E1, "\xEA\xAE\xB1"},
    {0x13E2, "\xEA\xAE\xB2"},
    {0x13E3, "\xEA\xAE\xB3"},
    {0x13E4, "\xEA\xAE\xB4"},
    {0x13E5, "\xEA\xAE\xB5"},
    {0x13E6, "\xEA\xAE\xB6"},
    {0x13E7, "\xEA\xAE\xB7"},
    {0x13E8, "\xEA\xAE\xB8"},
    {0x13E9, "\xEA\xAE\xB9"},
    {0x13EA, "\xEA\xAE\xBA"},
    {0x13EB, "\xEA\xAE\xBB"},
    {0x13EC, "\xEA\xAE\xBC"},
    {0x13ED, "\xEA\xAE\xBD"},
    {0x13EE, "\xEA\xAE\xBE"},
    {0x13EF, "\xEA\xAE\xBF"},
    {0x13F0, "\xE1\x8F\xB8"},
    {0x13F1, "\xE1\x8F\xB9"},
    {0x13F2, "\xE1\x8F\xBA"},
    {0x13F3, "\xE1\x8F\xBB"},
    {0x13F4, "\xE1\x8F\xBC"},
    {0x13F5, "\xE1\x8F\xBD"},
    {0x1C90, "\xE1\x83\x90"},
    {0x1C91, "\xE1\x83\x91"},
    {0x1C92, "\xE1\x83\x92"},
    {0x1C93, "\xE1\x83\x93"},
    {0x1C94, "\xE1\x83\x94"},
    {0x1C95, "\xE1\x83\x95"},
    {0x1C96, "\xE1\x83\x96"},
    {0x1C97, "\xE1\x83\x97"},
    {0x1C98, "\xE1\x83\x98"},
    {0x1C99, "\xE1\x83\x99"},
    {0x1C9A, "\xE1\x83\x9A"},
    {0x1C9B, "\xE1\x83\x9B"},
    {0x1C9C, "\xE1\x83\x9C"},
    {0x1C9D, "\xE1\x83\x9D"},
    {0x1C9E, "\xE1\x83\x9E"},
    {0x1C9F, "\xE1\x83\x9F"},
    {0x1CA0, "\xE1\x83\xA0"},
    {0x1CA1, "\xE1\x83\xA1"},
    {0x1CA2, "\xE1\x83\xA2"},
    {0x1CA3, "\xE1\x83\xA3"},
    {0x1CA4, "\xE1\x83\xA4"},
    {0x1CA5, "\xE1\x83\xA5"},
    {0x1CA6, "\xE1\x83\xA6"},
    {0x1CA7, "\xE1\x83\xA7"},
    {0x1CA8, "\xE1\x83\xA8"},
    {0x1CA9, "\xE1\x83\xA9"},
    {0x1CAA, "\xE1\x83\xAA"},
    {0x1CAB, "\xE1\x83\xAB"},
    {0x1CAC, "\xE1\x83\xAC"},
    {0x1CAD, "\xE1\x83\xAD"},
    {0x1CAE, "\xE1\x83\xAE"},
    {0x1CAF, "\xE1\x83\xAF"},
    {0x1CB0, "\xE1\x83\xB0"},
    {0x1CB1, "\xE1\x83\xB1"},
    {0x1CB2, "\xE1\x83\xB2"},
    {0x1CB3, "\xE1\x83\xB3"},
    {0x1CB4, "\xE1\x83\xB4"},
    {0x1CB5, "\xE1\x83\xB5"},
    {0x1CB6, "\xE1\x83\xB6"},
    {0x1CB7, "\xE1\x83\xB7"},
    {0x1CB8, "\xE1\x83\xB8"},
    {0x1CB9, "\xE1\x83\xB9"},
    {0x1CBA, "\xE1\x83\xBA"},
    {0x1CBD, "\xE1\x83\xBD"},
    {0x1CBE, "\xE1\x83\xBE"},
    {0x1CBF, "\xE1\x83\xBF"},
    {0x1E00, "\xE1\xB8\x81"},
    {0x1E02, "\xE1\xB8\x83"},
    {0x1E04, "\xE1\xB8\x85"},
    {0x1E06, "\xE1\xB8\x87"},
    {0x1E08, "\xE1\xB8\x89"},
    {0x1E0A, "\xE1\xB8\x8B"},
    {0x1E0C, "\xE1\xB8\x8D"},
    {0x1E0E, "\xE1\xB8\x8F"},
    {0x1E10, "\xE1\xB8\x91"},
    {0x1E12, "\xE1\xB8\x93"},
    {0x1E14, "\xE1\xB8\x95"},
    {0x1E16, "\xE1\xB8\x97"},
    {0x1E18, "\xE1\xB8\x99"},
    {0x1E1A, "\xE1\xB8\x9B"},
    {0x1E1C, "\xE1\xB8\x9D"},
    {0x1E1E, "\xE1\xB8\x9F"},
    {0x1E20, "\xE1\xB8\xA1"},
    {0x1E22, "\xE1\xB8\xA3"},
    {0x1E24, "\xE1\xB8\xA5"},
    {0x1E26, "\xE1\xB8\xA7"},
    {0x1E28, "\xE1\xB8\xA9"},
    {0x1E2A, "\xE1\xB8\xAB"},
    {0x1E2C, "\xE1\xB8\xAD"},
    {0x1E2E, "\xE1\xB8\xAF"},
    {0x1E30, "\xE1\xB8\xB1"},
    {0x1E32, "\xE1\xB8\xB3"},
    {0x1E34, "\xE1\xB8\xB5"},
    {0x1E36, "\xE1\xB8\xB7"},
    {0x1E38, "\xE1\xB8\xB9"},
    {0x1E3A, "\xE1\xB8\xBB"},
    {0x1E3C, "\xE1\xB8\xBD"},
    {0x1E3E, "\xE1\xB8\xBF"},
    {0x1E40, "\xE1\xB9\x81"},
    {0x1E42, "\xE1\xB9\x83"},
    {0x1E44, "\xE1\xB9\x85"},
    {0x1E46, "\xE1\xB9\x87"},
    {0x1E48, "\xE1\xB9\x89"},
    {0x1E4A, "\xE1\xB9\x8B"},
    {0x1E4C, "\xE1\xB9\x8D"},
    {0x1E4E, "\xE1\xB9\x8F"},
    {0x1E50, "\xE1\xB9\x91"},
    {0x1E52, "\xE1\xB9\x93"},
    {0x1E54, "\xE1\xB9\x95"},
    {0x1E56, "\xE1\xB9\x97"},
    {0x1E58, "\xE1\xB9\x99"},
    {0x1E5A, "\xE1\xB9\x9B"},
    {0x1E5C, "\xE1\xB9\x9D"},
    {0x1E5E, "\xE1\xB9\x9F"},
    {0x1E60, "\xE1\xB9\xA1"},
    {0x1E62, "\xE1\xB9\xA3"},
    {0x1E64, "\xE1\xB9\xA5"},
    {0x1E66, "\xE1\xB9\xA7"},
    {0x1E68, "\xE1\xB9\xA9"},
    {0x1E6A, "\xE1\xB9\xAB"},
    {0x1E6C, "\xE1\xB9\xAD"},
    {0x1E6E, "\xE1\xB9\xAF"},
    {0x1E70, "\xE1\xB9\xB1"},
    {0x1E72, "\xE1\xB9\xB3"},
    {0x1E74, "\xE1\xB9\xB5"},
    {0x1E76, "\xE1\xB9\xB7"},
    {0x1E78, "\xE1\xB9\xB9"},
    {0x1E7A, "\xE1\xB9\xBB"},
    {0x1E7C, "\xE1\xB9\xBD"},
    {0x1E7E, "\xE1\xB9\xBF"},
    {0x1E80, "\xE1\xBA\x81"},
    {0x1E82, "\xE1\xBA\x83"},
    {0x1E84, "\xE1\xBA\x85"},
    {0x1E86, "\xE1\xBA\x87"},
    {0x1E88, "\xE1\xBA\x89"},
    {0x1E8A, "\xE1\xBA\x8B"},
    {0x1E8C, "\xE1\xBA\x8D"},
    {0x1E8E, "\xE1\xBA\x8F"},
    {0x1E90, "\xE1\xBA\x91"},
    {0x1E92, "\xE1\xBA\x93"},
    {0x1E94, "\xE1\xBA\x95"},
    {0x1E9E, "\xC3\x9F"},
    {0x1EA0, "\xE1\xBA\xA1"},
    {0x1EA2, "\xE1\xBA\xA3"},
    {0x1EA4, "\xE1\xBA\xA5"},
    {0x1EA6, "\xE1\xBA\xA7"},
    {0x1EA8, "\xE1\xBA\xA9"},
    {0x1EAA, "\xE1\xBA\xAB"},
    {0x1EAC, "\xE1\xBA\xAD"},
    {0x1EAE, "\xE1\xBA\xAF"},
    {0x1EB0, "\xE1\xBA\xB1"},
    {0x1EB2, "\xE1\xBA\xB3"},
    {0x1EB4, "\xE1\xBA\xB5"},
    {0x1EB6, "\xE1\xBA\xB7"},
    {0x1EB8, "\xE1\xBA\xB9"},
    {0x1EBA, "\xE1\xBA\xBB"},
    {0x1EBC, "\xE1\xBA\xBD"},
    {0x1EBE, "\xE1\xBA\xBF"},
    {0x1EC0, "\xE1\xBB\x81"},
    {0x1EC2, "\xE1\xBB\x83"},
    {0x1EC4, "\xE1\xBB\x85"},
    {0x1EC6, "\xE1\xBB\x87"},
    {0x1EC8, "\xE1\xBB\x89"},
    {0x1ECA, "\xE1\xBB\x8B"},
    {0x1ECC, "\xE1\xBB\x8D"},
    {0x1ECE, "\xE1\xBB\x8F"},
    {0x1ED0, "\xE1\xBB\x91"},
    {0x1ED2, "\xE1\xBB\x93"},
    {0x1ED4, "\xE1\xBB\x95"},
    {0x1ED6, "\xE1\xBB\x97"},
    {0x1ED8, "\xE1\xBB\x99"},
    {0x1EDA, "\xE1\xBB\x9B"},
    {0x1EDC, "\xE1\xBB\x9D"},
    {0x1EDE, "\xE1\xBB\x9F"},
    {0x1EE0, "\xE1\xBB\xA1"},
    {0x1EE2, "\xE1\xBB\xA3"},
    {0x1EE4, "\xE1\xBB\xA5"},
    {0x1EE6, "\xE1\xBB\xA7"},
    {0x1EE8, "\xE1\xBB\xA9"},
    {0x1EEA, "\xE1\xBB\xAB"},
    {0x1EEC, "\xE1\xBB\xAD"},
    {0x1EEE, "\xE1\xBB\xAF"},
    {0x1EF0, "\xE1\xBB\xB1"},
    {0x1EF2, "\xE1\xBB\xB3"},
    {0x1EF4, "\xE1\xBB\xB5"},
    {0x1EF6, "\xE1\xBB\xB7"},
    {0x1EF8, "\xE1\xBB\xB9"},
    {0x1EFA, "\xE1\xBB\xBB"},
    {0x1EFC, "\xE1\xBB\xBD"},
    {0x1EFE, "\xE1\xBB\xBF"},
    {0x1F08, "\xE1\xBC\x80"},
    {0x1F09, "\xE1\xBC\x81"},
    {0x1F0A, "\xE1\xBC\x82"},
    {0x1F0B, "\xE1\xBC\x83"},
    {0x1F0C, "\xE1\xBC\x84"},
    {0x1F0D, "\xE1\xBC\x85"},
    {0x1F0E, "\xE1\xBC\x86"},
    {0x1F0F, "\xE1\xBC\x87"},
    {0x1F18, "\xE1\xBC\x90"},
    {0x1F19, "\xE1\xBC\x91"},
    {0x1F1A, "\xE1\xBC\x92"},
    {0x1F1B, "\xE1\xBC\x93"},
    {0x1F1C, "\xE1\xBC\x94"},
    {0x1F1D, "\xE1\xBC\x95"},
    {0x1F28, "\xE1\xBC\xA0"},
    {0x1F29, "\xE1\xBC\xA1"},
    {0x1F2A, "\xE1\xBC\xA2"},
    {0x1F2B, "\xE1\xBC\xA3"},
    {0x1F2C, "\xE1\xBC\xA4"},
    {0x1F2D, "\xE1\xBC\xA5"},
    {0x1F2E, "\xE1\xBC\xA6"},
    {0x1F2F, "\xE1\xBC\xA7"},
    {0x1F38, "\xE1\xBC\xB0"},
    {0x1F39, "\xE1\xBC\xB1"},
    {0x1F3A, "\xE1\xBC\xB2"},
    {0x1F3B, "\xE1\xBC\xB3"},
    {0x1F3C, "\xE1\xBC\xB4"},
    {0x1F3D, "\xE1\xBC\xB5"},
    {0x1F3E, "\xE1\xBC\xB6"},
    {0x1F3F, "\xE1\xBC\xB7"},
    {0x1F48, "\xE1\xBD\x80"},
    {0x1F49, "\xE1\xBD\x81"},
    {0x1F4A, "\xE1\xBD\x82"},
    {0x1F4B, "\xE1\xBD\x83"},
    {0x1F4C, "\xE1\xBD\x84"},
    {0x1F4D, "\xE1\xBD\x85"},
    {0x1F59, "\xE1\xBD\x91"},
    {0x1F5B, "\xE1\xBD\x93"},
    {0x1F5D, "\xE1\xBD\x95"},
    {0x1F5F, "\xE1\xBD\x97"},
    {0x1F68, "\xE1\xBD\xA0"},
    {0x1F69, "\xE1\xBD\xA1"},
    {0x1F6A, "\xE1\xBD\xA2"},
    {0x1F6B, "\xE1\xBD\xA3"},
    {0x1F6C, "\xE1\xBD\xA4"},
    {0x1F6D, "\xE1\xBD\xA5"},
    {0x1F6E, "\xE1\xBD\xA6"},
    {0x1F6F, "\xE1\xBD\xA7"},
    {0x1F88, "\xE1\xBE\x80"},
    {0x1F89, "\xE1\xBE\x81"},
    {0x1F8A, "\xE1\xBE\x82"},
    {0x1F8B, "\xE1\xBE\x83"},
    {0x1F8C, "\xE1\xBE\x84"},
    {0x1F8D, "\xE1\xBE\x85"},
    {0x1F8E, "\xE1\xBE\x86"},
    {0x1F8F, "\xE1\xBE\x87"},
    {0x1F98, "\xE1\xBE\x90"},
    {0x1F99, "\xE1\xBE\x91"},
    {0x1F9A, "\xE1\xBE\x92"},
    {0x1F9B, "\xE1\xBE\x93"},
    {0x1F9C, "\xE1\xBE\x94"},
    {0x1F9D, "\xE1\xBE\x95"},
    {0x1F9E, "\xE1\xBE\x96"},
    {0x1F9F, "\xE1\xBE\x97"},
    {0x1FA8, "\xE1\xBE\xA0"},
    {0x1FA9, "\xE1\xBE\xA1"},
    {0x1FAA, "\xE1\xBE\xA2"},
    {0x1FAB, "\xE1\xBE\xA3"},
    {0x1FAC, "\xE1\xBE\xA4"},
    {0x1FAD, "\xE1\xBE\xA5"},
    {0x1FAE, "\xE1\xBE\xA6"},
    {0x1FAF, "\xE1\xBE\xA7"},
    {0x1FB8, "\xE1\xBE\xB0"},
    {0x1FB9, "\xE1\xBE\xB1"},
    {0x1FBA, "\xE1\xBD\xB0"},
    {0x1FBB, "\xE1\xBD\xB1"},
    {0x1FBC, "\xE1\xBE\xB3"},
    {0x1FC8, "\xE1\xBD\xB2"},
    {0x1FC9, "\xE1\xBD\xB3"},
    {0x1FCA, "\xE1\xBD\xB4"},
    {0x1FCB, "\xE1\xBD\xB5"},
    {0x1FCC, "\xE1\xBF\x83"},
    {0x1FD8, "\xE1\xBF\x90"},
    {0x1FD9, "\xE1\xBF\x91"},
    {0x1FDA, "\xE1\xBD\xB6"},
    {0x1FDB, "\xE1\xBD\xB7"},
    {0x1FE8, "\xE1\xBF\xA0"},
    {0x1FE9, "\xE1\xBF\xA1"},
    {0x1FEA, "\xE1\xBD\xBA"},
    {0x1FEB, "\xE1\xBD\xBB"},
    {0x1FEC, "\xE1\xBF\xA5"},
    {0x1FF8, "\xE1\xBD\xB8"},
    {0x1FF9, "\xE1\xBD\xB9"},
    {0x1FFA, "\xE1\xBD\xBC"},
    {0x1FFB, "\xE1\xBD\xBD"},
    {0x1FFC, "\xE1\xBF\xB3"},
    {0x2126, "\xCF\x89"},
    {0x212A, "\x6B"},
    {0x212B, "\xC3\xA5"},
    {0x2132, "\xE2\x85\x8E"},
    {0x2160, "\xE2\x85\xB0"},
    {0x2161, "\xE2\x85\xB1"},
    {0x2162, "\xE2\x85\xB2"},
    {0x2163, "\xE2\x85\xB3"},
    {0x2164, "\xE2\x85\xB4"},
    {0x2165, "\xE2\x85\xB5"},
    {0x2166, "\xE2\x85\xB6"},
    {0x2167, "\xE2\x85\xB7"},
    {0x2168, "\xE2\x85\xB8"},
    {0x2169, "\xE2\x85\xB9"},
    {0x216A, "\xE2\x85\xBA"},
    {0x216B, "\xE2\x85\xBB"},
    {0x216C, "\xE2\x85\xBC"},
    {0x216D, "\xE2\x85\xBD"},
    {0x216E, "\xE2\x85\xBE"},
    {0x216F, "\xE2\x85\xBF"},
    {0x2183, "\xE2\x86\x84"},
    {0x2C00, "\xE2\xB0\xB0"},
    {0x2C01, "\xE2\xB0\xB1"},
    {0x2C02, "\xE2\xB0\xB2"},
    {0x2C03, "\xE2\xB0\xB3"},
    {0x2C04, "\xE2\xB0\xB4"},
    {0x2C05, "\xE2\xB0\xB5"},
    {0x2C06, "\xE2\xB0\xB6"},
    {0x2C07, "\xE2\xB0\xB7"},
    {0x2C08, "\xE2\xB0\xB8"},
    {0x2C09, "\xE2\xB0\xB9"},
    {0x2C0A, "\xE2\xB0\xBA"},
    {0x2C0B, "\xE2\xB0\xBB"},
    {0x2C0C, "\xE2\xB0\xBC"},
    {0x2C0D, "\xE2\xB0\xBD"},
    {0x2C0E, "\xE2\xB0\xBE"},
    {0x2C0F, "\xE2\xB0\xBF"},
    {0x2C10, "\xE2\xB1\x80"},
    {0x2C11, "\xE2\xB1\x81"},
    {0x2C12, "\xE2\xB1\x82"},
    {0x2C13, "\xE2\xB1\x83"},
    {0x2C14, "\xE2\xB1\x84"},
    {0x2C15, "\xE2\xB1\x85"},
    {0x2C16, "\xE2\xB1\x86"},
    {0x2C17, "\xE2\xB1\x87"},
    {0x2C18, "\xE2\xB1\x88"},
    {0x2C19, "\xE2\xB1\x89"},
    {0x2C1A, "\xE2\xB1\x8A"},
    {0x2C1B, "\xE2\xB1\x8B"},
    {0x2C1C, "\xE2\xB1\x8C"},
    {0x2C1D, "\xE2\xB1\x8D"},
    {0x2C1E, "\xE2\xB1\x8E"},
    {0x2C1F, "\xE2\xB1\x8F"},
    {0x2C20, "\xE2\xB1\x90"},
    {0x2C21, "\xE2\xB1\x91"},
    {0x2C22, "\xE2\xB1\x92"},
    {0x2C23, "\xE2\xB1\x93"},
    {0x2C24, "\xE2\xB1\x94"},
    {0x2C25, "\xE2\xB1\x95"},
    {0x2C26, "\xE2\xB1\x96"},
    {0x2C27, "\xE2\xB1\x97"},
    {0x2C28, "\xE2\xB1\x98"},
    {0x2C29, "\xE2\xB1\x99"},
    {0x2C2A, "\xE2\xB1\x9A"},
    {0x2C2B, "\xE2\xB1\x9B"},
    {0x2C2C, "\xE2\xB1\x9C"},
    {0x2C2D, "\xE2\xB1\x9D"},
    {0x2C2E, "\xE2\xB1\x9E"},
    {0x2C60, "\xE2\xB1\xA1"},
    {0x2C62, "\xC9\xAB"},
    {0x2C63, "\xE1\xB5\xBD"},
    {0x2C64, "\xC9\xBD"},
    {0x2C67, "\xE2\xB1\xA8"},
    {0x2C69, "\xE2\xB1\xAA"},
    {0x2C6B, "\xE2\xB1\xAC"},
    {0x2C6D, "\xC9\x91"},
    {0x2C6E, "\xC9\xB1"},
    {0x2C6F, "\xC9\x90"},
    {0x2C70, "\xC9\x92"},
    {0x2C72, "\xE2\xB1\xB3"},
    {0x2C75, "\xE2\xB1\xB6"},
    {0x2C7E, "\xC8\xBF"},
    {0x2C7F, "\xC9\x80"},
    {0x2C80, "\xE2\xB2\x81"},
    {0x2C82, "\xE2\xB2\x83"},
    {0x2C84, "\xE2\xB2\x85"},
    {0x2C86, "\xE2\xB2\x87"},
    {0x2C88, "\xE2\xB2\x89"},
    {0x2C8A, "\xE2\xB2\x8B"},
    {0x2C8C, "\xE2\xB2\x8D"},
    {0x2C8E, "\xE2\xB2\x8F"},
    {0x2C90, "\xE2\xB2\x91"},
    {0x2C92, "\xE2\xB2\x93"},
    {0x2C94, "\xE2\xB2\x95"},
    {0x2C96, "\xE2\xB2\x97"},
    {0x2C98, "\xE2\xB2\x99"},
    {0x2C9A, "\xE2\xB2\x9B"},
    {0x2C9C, "\xE2\xB2\x9D"},
    {0x2C9E, "\xE2\xB2\x9F"},
    {0x2CA0, "\xE2\xB2\xA1"},
    {0x2CA2, "\xE2\xB2\xA3"},
    {0x2CA4, "\xE2\xB2\xA5"},
    {0x2CA6, "\xE2\xB2\xA7"},
    {0x2CA8, "\xE2\xB2\xA9"},
    {0x2CAA, "\xE2\xB2\xAB"},
    {0x2CAC, "\xE2\xB2\xAD"},
    {0x2CAE, "\xE2\xB2\xAF"},
    {0x2CB0, "\xE2\xB2\xB1"},
    {0x2CB2, "\xE2\xB2\xB3"},
    {0x2CB4, "\xE2\xB2\xB5"},
    {0x2CB6, "\xE2\xB2\xB7"},
    {0x2CB8, "\xE2\xB2\xB9"},
    {0x2CBA, "\xE2\xB2\xBB"},
    {0x2CBC, "\xE2\xB2\xBD"},
    {0x2CBE, "\xE2\xB2\xBF"},
    {0x2CC0, "\xE2\xB3\x81"},
    {0x2CC2, "\xE2\xB3\x83"},
    {0x2CC4, "\xE2\xB3\x85"},
    {0x2CC6, "\xE2\xB3\x87"},
    {0x2CC8, "\xE2\xB3\x89"},
    {0x2CCA, "\xE2\xB3\x8B"},
    {0x2CCC, "\xE2\xB3\x8D"},
    {0x2CCE, "\xE2\xB3\x8F"},
    {0x2CD0, "\xE2\xB3\x91"},
    {0x2CD2, "\xE2\xB3\x93"},
    {0x2CD4, "\xE2\xB3\x95"},
    {0x2CD6, "\xE2\xB3\x97"},
    {0x2CD8, "\xE2\xB3\x99"},
    {0x2CDA, "\xE2\xB3\x9B"},
    {0x2CDC, "\xE2\xB3\x9D"},
    {0x2CDE, "\xE2\xB3\x9F"},
    {0x2CE0, "\xE2\xB3\xA1"},
    {0x2CE2, "\xE2\xB3\xA3"},
    {0x2CEB, "\xE2\xB3\xAC"},
    {0x2CED, "\xE2\xB3\xAE"},
    {0x2CF2, "\xE2\xB3\xB3"},
    {0xA640, "\xEA\x99\x81"},
    {0xA642, "\xEA\x99\x83"},
    {0xA644, "\xEA\x99\x85"},
    {0xA646, "\xEA\x99\x87"},
    {0xA648, "\xEA\x99\x89"},
    {0xA64A, "\xEA\x99\x8B"},
    {0xA64C, "\xEA\x99\x8D"},
    {0xA64E, "\xEA\x99\x8F"},
    {0xA650, "\xEA\x99\x91"},
    {0xA652, "\xEA\x99\x93"},
    {0xA654, "\xEA\x99\x95"},
    {0xA656, "\xEA\x99\x97"},
    {0xA658, "\xEA\x99\x99"},
    {0xA65A, "\xEA\x99\x9B"},
    {0xA65C, "\xEA\x99\x9D"},
    {0xA65E, "\xEA\x99\x9F"},
    {0xA660, "\xEA\x99\xA1"},
    {0xA662, "\xEA\x99\xA3"},
    {0xA664, "\xEA\x99\xA5"},
    {0xA666, "\xEA\x99\xA7"},
    {0xA668, "\xEA\x99\xA9"},
    {0xA66A, "\xEA\x99\xAB"},
    {0xA66C, "\xEA\x99\xAD"},
    {0xA680, "\xEA\x9A\x81"},
    {0xA682, "\xEA\x9A\x83"},
    {0xA684, "\xEA\x9A\x85"},
    {0xA686, "\xEA\x9A\x87"},
    {0xA688, "\xEA\x9A\x89"},
    {0xA68A, "\xEA\x9A\x8B"},
    {0xA68C, "\xEA\x9A\x8D"},
    {0xA68E, "\xEA\x9A\x8F"},
    {0xA690, "\xEA\x9A\x91"},
    {0xA692, "\xEA\x9A\x93"},
    {0xA694, "\xEA\x9A\x95"},
    {0xA696, "\xEA\x9A\x97"},
    {0xA698, "\xEA\x9A\x99"},
    {0xA69A, "\xEA\x9A\x9B"},
    {0xA722, "\xEA\x9C\xA3"},
    {0xA724, "\xEA\x9C\xA5"},
    {0xA726, "\xEA\x9C\xA7"},
    {0xA728, "\xEA\x9C\xA9"},
    {0xA72A, "\xEA\x9C\xAB"},
    {0xA72C, "\xEA\x9C\xAD"},
    {0xA72E, "\xEA\x9C\xAF"},
    {0xA732, "\xEA\x9C\xB3"},
    {0xA734, "\xEA\x9C\xB5"},
    {0xA736, "\xEA\x9C\xB7"},
    {0xA738, "\xEA\x9C\xB9"},
    {0xA73A, "\xEA\x9C\xBB"},
    {0xA73C, "\xEA\x9C\xBD"},
    {0xA73E, "\xEA\x9C\xBF"},
    {0xA740, "\xEA\x9D\x81"},
    {0xA742, "\xEA\x9D\x83"},
    {0xA744, "\xEA\x9D\x85"},
    {0xA746, "\xEA\x9D\x87"},
    {0xA748, "\xEA\x9D\x89"},
    {0xA74A, "\xEA\x9D\x8B"},
    {0xA74C, "\xEA\x9D\x8D"},
    {0xA74E, "\xEA\x9D\x8F"},
    {0xA750, "\xEA\x9D\x91"},
    {0xA752, "\xEA\x9D\x93"},
    {0xA754, "\xEA\x9D\x95"},
    {0xA756, "\xEA\x9D\x97"},
    {0xA758, "\xEA\x9D\x99"},
    {0xA75A, "\xEA\x9D\x9B"},
    {0xA75C, "\xEA\x9D\x9D"},
    {0xA75E, "\xEA\x9D\x9F"},
    {0xA760, "\xEA\x9D\xA1"},
    {0xA762, "\xEA\x9D\xA3"},
    {0xA764, "\xEA\x9D\xA5"},
    {0xA766, "\xEA\x9D\xA7"},
    {0xA768, "\xEA\x9D\xA9"},
    {0xA76A, "\xEA\x9D\xAB"},
    {0xA76C, "\xEA\x9D\xAD"},
    {0xA76E, "\xEA\x9D\xAF"},
    {0xA779, "\xEA\x9D\xBA"},
    {0xA77B, "\xEA\x9D\xBC"},
    {0xA77D, "\xE1\xB5\xB9"},
    {0xA77E, "\xEA\x9D\xBF"},
    {0xA780, "\xEA\x9E\x81"},
    {0xA782, "\xEA\x9E\x83"},
    {0xA784, "\xEA\x9E\x85"},
    {0xA786, "\xEA\x9E\x87"},
    {0xA78B, "\xEA\x9E\x8C"},
    {0xA78D, "\xC9\xA5"},
    {0xA790, "\xEA\x9E\x91"},
    {0xA792, "\xEA\x9E\x93"},
    {0xA796, "\xEA\x9E\x97"},
    {0xA798, "\xEA\x9E\x99"},
    {0xA79A, "\xEA\x9E\x9B"},
    {0xA79C, "\xEA\x9E\x9D"},
    {0xA79E, "\xEA\x9E\x9F"},
    {0xA7A0, "\xEA\x9E\xA1"},
    {0xA7A2, "\xEA\x9E\xA3"},
    {0xA7A4, "\xEA\x9E\xA5"},
    {0xA7A6, "\xEA\x9E\xA7"},
    {0xA7A8, "\xEA\x9E\xA9"},
    {0xA7AA, "\xC9\xA6"},
    {0xA7AB, "\xC9\x9C"},
    {0xA7AC, "\xC9\xA1"},
    {0xA7AD, "\xC9\xAC"},
    {0xA7AE, "\xC9\xAA"},
    {0xA7B0, "\xCA\x9E"},
    {0xA7B1, "\xCA\x87"},
    {0xA7B2, "\xCA\x9D"},
    {0xA7B3, "\xEA\xAD\x93"},
    {0xA7B4, "\xEA\x9E\xB5"},
    {0xA7B6, "\xEA\x9E\xB7"},
    {0xA7B8, "\xEA\x9E\xB9"},
    {0xA7BA, "\xEA\x9E\xBB"},
    {0xA7BC, "\xEA\x9E\xBD"},
    {0xA7BE, "\xEA\x9E\xBF"},
    {0xA7C2, "\xEA\x9F\x83"},
    {0xA7C4, "\xEA\x9E\x94"},
    {0xA7C5, "\xCA\x82"},
    {0xA7C6, "\xE1\xB6\x8E"},
    {0xA7C7, "\xEA\x9F\x88"},
    {0xA7C9, "\xEA\x9F\x8A"},
    {0xA7F5, "\xEA\x9F\xB6"},
    {0xFF21, "\xEF\xBD\x81"},
    {0xFF22, "\xEF\xBD\x82"},
    {0xFF23, "\xEF\xBD\x83"},
    {0xFF24, "\xEF\xBD\x84"},
    {0xFF25, "\xEF\xBD\x85"},
    {0xFF26, "\xEF\xBD\x86"},
    {0xFF27, "\xEF\xBD\x87"},
    {0xFF28, "\xEF\xBD\x88"},
    {0xFF29, "\xEF\xBD\x89"},
    {0xFF2A, "\xEF\xBD\x8A"},
    {0xFF2B, "\xEF\xBD\x8B"},
    {0xFF2C, "\xEF\xBD\x8C"},
    {0xFF2D, "\xEF\xBD\x8D"},
    {0xFF2E, "\xEF\xBD\x8E"},
    {0xFF2F, "\xEF\xBD\x8F"},
    {0xFF30, "\xEF\xBD\x90"},
    {0xFF31, "\xEF\xBD\x91"},
    {0xFF32, "\xEF\xBD\x92"},
    {0xFF33, "\xEF\xBD\x93"},
    {0xFF34, "\xEF\xBD\x94"},
    {0xFF35, "\xEF\xBD\x95"},
    {0xFF36, "\xEF\xBD\x96"},
    {0xFF37, "\xEF\xBD\x97"},
    {0xFF38, "\xEF\xBD\x98"},
    {0xFF39, "\xEF\xBD\x99"},
    {0xFF3A, "\xEF\xBD\x9A"},
    {0x10400, "\xF0\x90\x90\xA8"},
    {0x10401, "\xF0\x90\x90\xA9"},
    {0x10402, "\xF0\x90\x90\xAA"},
    {0x10403, "\xF0\x90\x90\xAB"},
    {0x10404, "\xF0\x90\x90\xAC"},
    {0x10405, "\xF0\x90\x90\xAD"},
    {0x10406, "\xF0\x90\x90\xAE"},
    {0x10407, "\xF0\x90\x90\xAF"},
    {0x10408, "\xF0\x90\x90\xB0"},
    {0x10409, "\xF0\x90\x90\xB1"},
    {0x1040A, "\xF0\x90\x90\xB2"},
    {0x1040B, "\xF0\x90\x90\xB3"},
    {0x1040C, "\xF0\x90\x90\xB4"},
    {0x1040D, "\xF0\x90\x90\xB5"},
    {0x1040E, "\xF0\x90\x90\xB6"},
    {0x1040F, "\xF0\x90\x90\xB7"},
    {0x10410, "\xF0\x90\x90\xB8"},
    {0x10411, "\xF0\x90\x90\xB9"},
    {0x10412, "\xF0\x90\x90\xBA"},
    {0x10413, "\xF0\x90\x90\xBB"},
    {0x10414, "\xF0\x90\x90\xBC"},
    {0x10415, "\xF0\x90\x90\xBD"},
    {0x10416, "\xF0\x90\x90\xBE"},
    {0x10417, "\xF0\x90\x90\xBF"},
    {0x10418, "\xF0\x90\x91\x80"},
    {0x10419, "\xF0\x90\x91\x81"},
    {0x1041A, "\xF0\x90\x91\x82"},
    {0x1041B, "\xF0\x90\x91\x83"},
    {0x1041C, "\xF0\x90\x91\x84"},
    {0x1041D, "\xF0\x90\x91\x85"},
    {0x1041E, "\xF0\x90\x91\x86"},
    {0x1041F, "\xF0\x90\x91\x87"},
    {0x10420, "\xF0\x90\x91\x88"},
    {0x10421, "\xF0\x90\x91\x89"},
    {0x10422, "\xF0\x90\x91\x8A"},
    {0x10423, "\xF0\x90\x91\x8B"},
    {0x10424, "\xF0\x90\x91\x8C"},
    {0x10425, "\xF0\x90\x91\x8D"},
    {0x10426, "\xF0\x90\x91\x8E"},
    {0x10427, "\xF0\x90\x91\x8F"},
    {0x104B0, "\xF0\x90\x93\x98"},
    {0x104B1, "\xF0\x90\x93\x99"},
    {0x104B2, "\xF0\x90\x93\x9A"},
    {0x104B3, "\xF0\x90\x93\x9B"},
    {0x104B4, "\xF0\x90\x93\x9C"},
    {0x104B5, "\xF0\x90\x93\x9D"},
    {0x104B6, "\xF0\x90\x93\x9E"},
    {0x104B7, "\xF0\x90\x93\x9F"},
    {0x104B8, "\xF0\x90\x93\xA0"},
    {0x104B9, "\xF0\x90\x93\xA1"},
    {0x104BA, "\xF0\x90\x93\xA2"},
    {0x104BB, "\xF0\x90\x93\xA3"},
    {0x104BC, "\xF0\x90\x93\xA4"},
    {0x104BD, "\xF0\x90\x93\xA5"},
    {0x104BE, "\xF0\x90\x93\xA6"},
    {0x104BF, "\xF0\x90\x93\xA7"},
    {0x104C0, "\xF0\x90\x93\xA8"},
    {0x104C1, "\xF0\x90\x93\xA9"},
    {0x104C2, "\xF0\x90\x93\xAA"},
    {0x104C3, "\xF0\x90\x93\xAB"},
    {0x104C4, "\xF0\x90\x93\xAC"},
    {0x104C5, "\xF0\x90\x93\xAD"},
    {0x104C6, "\xF0\x90\x93\xAE"},
    {0x104C7, "\xF0\x90\x93\xAF"},
    {0x104C8, "\xF0\x90\x93\xB0"},
    {0x104C9, "\xF0\x90\x93\xB1"},
    {0x104CA, "\xF0\x90\x93\xB2"},
    {0x104CB, "\xF0\x90\x93\xB3"},
    {0x104CC, "\xF0\x90\x93\xB4"},
    {0x104CD, "\xF0\x90\x93\xB5"},
    {0x104CE, "\xF0\x90\x93\xB6"},
    {0x104CF, "\xF0\x90\x93\xB7"},
    {0x104D0, "\xF0\x90\x93\xB8"},
    {0x104D1, "\xF0\x90\x93\xB9"},
    {0x104D2, "\xF0\x90\x93\xBA"},
    {0x104D3, "\xF0\x90\x93\xBB"},
    {0x10C80, "\xF0\x90\xB3\x80"},
    {0x10C81, "\xF0\x90\xB3\x81"},
    {0x10C82, "\xF0\x90\xB3\x82"},
    {0x10C83, "\xF0\x90\xB3\x83"},
    {0x10C84, "\xF0\x90\xB3\x84"},
    {0x10C85, "\xF0\x90\xB3\x85"},
    {0x10C86, "\xF0\x90\xB3\x86"},
    {0x10C87, "\xF0\x90\xB3\x87"},
    {0x10C88, "\xF0\x90\xB3\x88"},
    {0x10C89, "\xF0\x90\xB3\x89"},
    {0x10C8A, "\xF0\x90\xB3\x8A"},
    {0x10C8B, "\xF0\x90\xB3\x8B"},
    {0x10C8C, "\xF0\x90\xB3\x8C"},
    {0x10C8D, "\xF0\x90\xB3\x8D"},
    {0x10C8E, "\xF0\x90\xB3\x8E"},
    {0x10C8F, "\xF0\x90\xB3\x8F"},
    {0x10C90, "\xF0\x90\xB3\x90"},
    {0x10C91, "\xF0\x90\xB3\x91"},
    {0x10C92, "\xF0\x90\xB3\x92"},
    {0x10C93, "\xF0\x90\xB3\x93"},
    {0x10C94, "\xF0\x90\xB3\x94"},
    {0x10C95, "\xF0\x90\xB3\x95"},
    {0x10C96, "\xF0\x90\xB3\x96"},
    {0x10C97, "\xF0\x90\xB3\x97"},
    {0x10C98, "\xF0\x90\xB3\x98"},
    {0x10C99, "\xF0\x90\xB3\x99"},
    {0x10C9A, "\xF0\x90\xB3\x9A"},
    {0x10C9B, "\xF0\x90\xB3\x9B"},
    {0x10C9C, "\xF0\x90\xB3\x9C"},
    {0x10C9D, "\xF0\x90\xB3\x9D"},
    {0x10C9E, "\xF0\x90\xB3\x9E"},
    {0x10C9F, "\xF0\x90\xB3\x9F"},
    {0x10CA0, "\xF0\x90\xB3\xA0"},
    {0x10CA1, "\xF0\x90\xB3\xA1"},
    {0x10CA2, "\xF0\x90\xB3\xA2"},
    {0x10CA3, "\xF0\x90\xB3\xA3"},
    {0x10CA4, "\xF0\x90\xB3\xA4"},
    {0x10CA5, "\xF0\x90\xB3\xA5"},
    {0x10CA6, "\xF0\x90\xB3\xA6"},
    {0x10CA7, "\xF0\x90\xB3\xA7"},
    {0x10CA8, "\xF0\x90\xB3\xA8"},
    {0x10CA9, "\xF0\x90\xB3\xA9"},
    {0x10CAA, "\xF0\x90\xB3\xAA"},
    {0x10CAB, "\xF0\x90\xB3\xAB"},
    {0x10CAC, "\xF0\x90\xB3\xAC"},
    {0x10CAD, "\xF0\x90\xB3\xAD"},
    {0x10CAE, "\xF0\x90\xB3\xAE"},
    {0x10CAF, "\xF0\x90\xB3\xAF"},
    {0x10CB0, "\xF0\x90\xB3\xB0"},
    {0x10CB1, "\xF0\x90\xB3\xB1"},
    {0x10CB2, "\xF0\x90\xB3\xB2"},
    {0x118A0, "\xF0\x91\xA3\x80"},
    {0x118A1, "\xF0\x91\xA3\x81"},
    {0x118A2, "\xF0\x91\xA3\x82"},
    {0x118A3, "\xF0\x91\xA3\x83"},
    {0x118A4, "\xF0\x91\xA3\x84"},
    {0x118A5, "\xF0\x91\xA3\x85"},
    {0x118A6, "\xF0\x91\xA3\x86"},
    {0x118A7, "\xF0\x91\xA3\x87"},
    {0x118A8, "\xF0\x91\xA3\x88"},
    {0x118A9, "\xF0\x91\xA3\x89"},
    {0x118AA, "\xF0\x91\xA3\x8A"},
    {0x118AB, "\xF0\x91\xA3\x8B"},
    {0x118AC, "\xF0\x91\xA3\x8C"},
    {0x118AD, "\xF0\x91\xA3\x8D"},
    {0x118AE, "\xF0\x91\xA3\x8E"},
    {0x118AF, "\xF0\x91\xA3\x8F"},
    {0x118B0, "\xF0\x91\xA3\x90"},
    {0x118B1, "\xF0\x91\xA3\x91"},
    {0x118B2, "\xF0\x91\xA3\x92"},
    {0x118B3, "\xF0\x91\xA3\x93"},
    {0x118B4, "\xF0\x91\xA3\x94"},
    {0x118B5, "\xF0\x91\xA3\x95"},
    {0x118B6, "\xF0\x91\xA3\x96"},
    {0x118B7, "\xF0\x91\xA3\x97"},
    {0x118B8, "\xF0\x91\xA3\x98"},
    {0x118B9, "\xF0\x91\xA3\x99"},
    {0x118BA, "\xF0\x91\xA3\x9A"},
    {0x118BB, "\xF0\x91\xA3\x9B"},
    {0x118BC, "\xF0\x91\xA3\x9C"},
    {0x118BD, "\xF0\x91\xA3\x9D"},
    {0x118BE, "\xF0\x91\xA3\x9E"},
    {0x118BF, "\xF0\x91\xA3\x9F"},
    {0x16E40, "\xF0\x96\xB9\xA0"},
    {0x16E41, "\xF0\x96\xB9\xA1"},
    {0x16E42, "\xF0\x96\xB9\xA2"},
    {0x16E43, "\xF0\x96\xB9\xA3"},
    {0x16E44, "\xF0\x96\xB9\xA4"},
    {0x16E45, "\xF0\x96\xB9\xA5"},
    {0x16E46, "\xF0\x96\xB9\xA6"},
    {0x16E47, "\xF0\x96\xB9\xA7"},
    {0x16E48, "\xF0\x96\xB9\xA8"},
    {0x16E49, "\xF0\x96\xB9\xA9"},
    {0x16E4A, "\xF0\x96\xB9\xAA"},
    {0x16E4B, "\xF0\x96\xB9\xAB"},
    {0x16E4C, "\xF0\x96\xB9\xAC"},
    {0x16E4D, "\xF0\x96\xB9\xAD"},
    {0x16E4E, "\xF0\x96\xB9\xAE"},
    {0x16E4F, "\xF0\x96\xB9\xAF"},
    {0x16E50, "\xF0\x96\xB9\xB0"},
    {0x16E51, "\xF0\x96\xB9\xB1"},
    {0x16E52, "\xF0\x96\xB9\xB2"},
    {0x16E53, "\xF0\x96\xB9\xB3"},
    {0x16E54, "\xF0\x96\xB9\xB4"},
    {0x16E55, "\xF0\x96\xB9\xB5"},
    {0x16E56, "\xF0\x96\xB9\xB6"},
    {0x16E57, "\xF0\x96\xB9\xB7"},
    {0x16E58, "\xF0\x96\xB9\xB8"},
    {0x16E59, "\xF0\x96\xB9\xB9"},
    {0x16E5A, "\xF0\x96\xB9\xBA"},
    {0x16E5B, "\xF0\x96\xB9\xBB"},
    {0x16E5C, "\xF0\x96\xB9\xBC"},
    {0x16E5D, "\xF0\x96\xB9\xBD"},
    {0x16E5E, "\xF0\x96\xB9\xBE"},
    {0x16E5F, "\xF0\x96\xB9\xBF"},
    {0x1E900, "\xF0\x9E\xA4\xA2"},
    {0x1E901, "\xF0\x9E\xA4\xA3"},
    {0x1E902, "\xF0\x9E\xA4\xA4"},
    {0x1E903, "\xF0\x9E\xA4\xA5"},
    {0x1E904, "\xF0\x9E\xA4\xA6"},
    {0x1E905, "\xF0\x9E\xA4\xA7"},
    {0x1E906, "\xF0\x9E\xA4\xA8"},
    {0x1E907, "\xF0\x9E\xA4\xA9"},
    {0x1E908, "\xF0\x9E\xA4\xAA"},
    {0x1E909, "\xF0\x9E\xA4\xAB"},
    {0x1E90A, "\xF0\x9E\xA4\xAC"},
    {0x1E90B, "\xF0\x9E\xA4\xAD"},
    {0x1E90C, "\xF0\x9E\xA4\xAE"},
    {0x1E90D, "\xF0\x9E\xA4\xAF"},
    {0x1E90E, "\xF0\x9E\xA4\xB0"},
    {0x1E90F, "\xF0\x9E\xA4\xB1"},
    {0x1E910, "\xF0\x9E\xA4\xB2"},
    {0x1E911, "\xF0\x9E\xA4\xB3"},
    {0x1E912, "\xF0\x9E\xA4\xB4"},
    {0x1E913, "\xF0\x9E\xA4\xB5"},
    {0x1E914, "\xF0\x9E\xA4\xB6"},
    {0x1E915, "\xF0\x9E\xA4\xB7"},
    {0x1E916, "\xF0\x9E\xA4\xB8"},
    {0x1E917, "\xF0\x9E\xA4\xB9"},
    {0x1E918, "\xF0\x9E\xA4\xBA"},
    {0x1E919, "\xF0\x9E\xA4\xBB"},
    {0x1E91A, "\xF0\x9E\xA4\xBC"},
    {0x1E91B, "\xF0\x9E\xA4\xBD"},
    {0x1E91C, "\xF0\x9E\xA4\xBE"},
    {0x1E91D, "\xF0\x9E\xA4\xBF"},
    {0x1E91E, "\xF0\x9E\xA5\x80"},
    {0x1E91F, "\xF0\x9E\xA5\x81"},
    {0x1E920, "\xF0\x9E\xA5\x82"},
    {0x1E921, "\xF0\x9E\xA5\x83"},
}};

}  // namespace curate::detail
