#pragma once

#include <string_view>
#include <vector>

namespace binsum::tables {

// Reference values for the three sequence families. Generating functions are
// written as plain expressions in z; parse with parse_rational_function.

struct b_row {
    long k;
    std::string_view q;
    std::vector<std::string_view> terms;
    std::string_view gf;
};

struct a_row {
    long k;
    long q;
    std::string_view gf;
    std::string_view oeis;
};

// terms are c(0), c(1), ...
struct c_row {
    long J;
    long q;
    std::vector<std::string_view> terms;
    std::string_view gf;
};

inline const std::vector<b_row>& b_rows() {
    static const std::vector<b_row> rows = {
        {0, "0", {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}, "1"},
        {0, "1", {"1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1"}, "(1)/(1+z)"},
        {0, "2", {"1", "-2", "4", "-8", "16", "-32", "64", "-128", "256", "-512", "1024", "-2048"}, "(1)/(1+2*z)"},
        {0, "3", {"1", "-3", "9", "-27", "81", "-243", "729", "-2187", "6561", "-19683", "59049", "-177147"}, "(1)/(1+3*z)"},
        {1, "0", {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}, "1"},
        {1, "1/2", {"1", "-7/8", "5/8", "-13/32", "1/4", "-19/128", "11/128"}, "(8+z)/(2*(z+2)^2)"},
        {1, "1", {"1", "-2", "3", "-4", "5", "-6", "7", "-8", "9", "-10", "11", "-12", "13", "-14", "15", "-16"}, "(1)/((1+z)^2)"},
        {1, "3/2", {"1", "-27/8", "63/8", "-513/32", "243/8", "-7047/128", "12393/128", "-85293/512"}, "(8-3*z)/(2*(2+3*z)^2)"},
        {1, "2", {"1", "-5", "16", "-44", "112", "-272", "640", "-1472", "3328", "-7424", "16384", "-35840"}, "(1-z)/((1+2*z)^2)"},
        {1, "3", {"1", "-9", "45", "-189", "729", "-2673", "9477", "-32805", "111537", "-373977", "1240029", "-4074381"}, "(1-3*z)/((1+3*z)^2)"},
        {1, "4", {"1", "-14", "96", "-544", "2816", "-13824", "65536", "-303104", "1376256", "-6160384", "27262976"}, "(1-6*z)/((1+4*z)^2)"},
        {1, "5", {"1", "-20", "175", "-1250", "8125", "-50000", "296875", "-1718750", "9765625", "-54687500"}, "(1-10*z)/((1+5*z)^2)"},
        {2, "0", {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}, "1"},
        {2, "1", {"1", "-3", "6", "-10", "15", "-21", "28", "-36", "45", "-55", "66", "-78", "91", "-105", "120", "-136"}, "(1)/((1+z)^3)"},
        {2, "2", {"1", "-9", "41", "-146", "456", "-1312", "3568", "-9312", "23552", "-58112", "140544"}, "(1-3*z-z^2)/((1+2*z)^3)"},
        {2, "3", {"1", "-19", "141", "-783", "3753", "-16443", "67797", "-267543", "1021329", "-3798819"}, "(1-10*z-3*z^2)/((1+3*z)^3)"},
        {2, "4", {"1", "-34", "356", "-2704", "17536", "-103424", "572416", "-3026944", "15466496", "-76939264"}, "(1-22*z-4*z^2)/((1+4*z)^3)"},
        {2, "5", {"1", "-55", "750", "-7250", "59375", "-440625", "3062500", "-20312500", "130078125"}, "(1-40*z)/((1+5*z)^3)"},
        {3, "0", {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}, "1"},
        {3, "1", {"1", "-4", "10", "-20", "35", "-56", "84", "-120", "165", "-220", "286", "-364", "455", "-560", "680", "-816"}, "(1)/((1+z)^4)"},
        {3, "2", {"1", "-14", "85", "-377", "1408", "-4712", "14608", "-42800", "120064", "-325376", "857344"}, "(1-6*z-3*z^2-z^3)/((1+2*z)^4)"},
        {3, "3", {"1", "-34", "351", "-2484", "14445", "-74358", "352107", "-1568808", "6672537", "-27359370"}, "(1-22*z-3*z^2)/((1+3*z)^4)"},
        {3, "4", {"1", "-69", "1036", "-10184", "80896", "-564224", "3603456", "-21592064", "123273216"}, "((1-z)*(1-52*z-24*z^2))/((1+4*z)^4)"},
    };
    return rows;
}

inline const std::vector<a_row>& a_rows() {
    static const std::vector<a_row> rows = {
        {0, 0, "-1/(-1+z)", ""},
        {0, 1, "-1/(-1+2*z)", ""},
        {0, 2, "-1/(-1+3*z)", ""},
        {0, 3, "-1/(-1+4*z)", ""},
        {0, 4, "-1/(-1+5*z)", ""},
        {0, 5, "-1/(-1+6*z)", ""},
        {1, 0, "-1/(-1+z)", ""},
        {1, 1, "-(-1+z)/(-1+2*z)^2", ""},
        {1, 2, "1/(-1+3*z)^2", "A027471"},
        {1, 3, "(1+2*z)/(-1+4*z)^2", ""},
        {1, 4, "(1+5*z)/(-1+5*z)^2", ""},
        {1, 5, "(1+9*z)/(-1+6*z)^2", ""},
        {2, 0, "-1/(-1+z)", ""},
        {2, 1, "-(-1+z)^2/(-1+2*z)^3", ""},
        {2, 2, "(-1-z+3*z^2)/(-1+3*z)^3", ""},
        {2, 3, "(-1-8*z+12*z^2)/(-1+4*z)^3", "A361609"},
        {2, 4, "(-1-20*z+25*z^2)/(-1+5*z)^3", ""},
        {2, 5, "(-1+z)*(1+39*z)/(-1+6*z)^3", ""},
        {3, 0, "-1/(-1+z)", ""},
        {3, 1, "-(-1+z)^3/(-1+2*z)^4", ""},
        {3, 2, "(1+3*z-12*z^2+9*z^3)/(-1+3*z)^4", ""},
        {3, 3, "(-1+z)*(-1-20*z+24*z^2)/(-1+4*z)^4", ""},
        {3, 4, "-(75*z^2-50*z-1)/(-1+5*z)^4", "A361610"},
        {3, 5, "-(-1-102*z+57*z^2+171*z^3)/(-1+6*z)^4", ""},
        {4, 0, "-1/(-1+z)", ""},
        {4, 1, "-(-1+z)^4/(-1+2*z)^5", ""},
        {4, 2, "(-1-6*z+29*z^2-39*z^3+18*z^4)/(-1+3*z)^5", ""},
        {4, 3, "-(1+36*z-92*z^2+48*z^3+16*z^4)/(-1+4*z)^5", ""},
        {4, 4, "-(1+101*z-65*z^2-425*z^3+500*z^4)/(-1+5*z)^5", ""},
        {4, 5, "-(1+222*z+388*z^2-2496*z^3+2385*z^4)/(-1+6*z)^5", ""},
        {5, 0, "-1/(-1+z)", ""},
        {5, 1, "-(-1+z)^5/(-1+2*z)^6", ""},
        {5, 2, "(1+10*z-55*z^2+99*z^3-81*z^4+27*z^5)/(-1+3*z)^6", ""},
        {5, 3, "-(-1-60*z+132*z^2+100*z^3-432*z^4+288*z^5)/(-1+4*z)^6", ""},
        {5, 4, "-(-1-180*z-270*z^2+2800*z^3-4625*z^4+2500*z^5)/(-1+5*z)^6", ""},
        {5, 5, "-(-1+z)*(1+427*z+3123*z^2-10206*z^3+7155*z^4)/(-1+6*z)^6", ""},
        {5, 6, "(36015*z^4-40474*z^3+10731*z^2+882*z+1)/(-1+7*z)^6", "A361608"},
    };
    return rows;
}

inline const std::vector<c_row>& c_rows() {
    static const std::vector<c_row> rows = {
        {1, 3, {"1", "4", "7", "10", "13", "16", "19", "22", "25"}, "(1+2*z)/((1-z)^2)"},
        {1, 4, {"1", "5", "9", "13", "17", "21", "25", "29", "33"}, "(1+3*z)/((1-z)^2)"},
        {1, 5, {"1", "6", "11", "16", "21", "26", "31", "36", "41"}, "(1+4*z)/((1-z)^2)"},
        {2, 3, {"1", "10", "28", "55", "91", "136", "190", "253", "325"}, "(1+7*z+z^2)/((1-z)^3)"},
        {2, 4, {"1", "15", "45", "91", "153", "231", "325", "435", "561"}, "(1+12*z+3*z^2)/((1-z)^3)"},
        {2, 5, {"1", "21", "66", "136", "231", "351", "496", "666", "861"}, "(1+18*z+6*z^2)/((1-z)^3)"},
        {3, 3, {"1", "20", "84", "220", "455", "816", "1330", "2024", "2925"}, "(1+16*z+10*z^2)/((1-z)^4)"},
        {3, 4, {"1", "35", "165", "455", "969", "1771", "2925", "4495", "6545"}, "((1+z)*(1+30*z+z^2))/((1-z)^4)"},
        {3, 5, {"1", "56", "286", "816", "1771", "3276", "5456", "8436", "12341"}, "(1+52*z+68*z^2+4*z^3)/((1-z)^4)"},
        {4, 3, {"1", "35", "210", "715", "1820", "3876", "7315", "12650", "20475"}, "(1+30*z+45*z^2+5*z^3)/((1-z)^5)"},
        {4, 4, {"1", "70", "495", "1820", "4845", "10626", "20475", "35960", "58905"}, "(1+65*z+155*z^2+35*z^3)/((1-z)^5)"},
        {4, 5, {"1", "126", "1001", "3876", "10626", "23751", "46376", "82251", "135751"}, "(1+121*z+381*z^2+121*z^3+z^4)/((1-z)^5)"},
        {5, 3, {"1", "56", "462", "2002", "6188", "15504", "33649", "65780", "118755"}, "(1+50*z+141*z^2+50*z^3+z^4)/((1-z)^6)"},
        {5, 4, {"1", "126", "1287", "6188", "20349", "53130", "118755", "237336", "435897"}, "(1+120*z+546*z^2+336*z^3+21*z^4)/((1-z)^6)"},
        {5, 5, {"1", "252", "3003", "15504", "53130", "142506", "324632", "658008", "1221759"}, "(1+246*z+1506*z^2+1246*z^3+126*z^4)/((1-z)^6)"},
    };
    return rows;
}

}  // namespace binsum::tables
