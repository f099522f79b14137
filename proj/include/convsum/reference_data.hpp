#ifndef CONVSUM_REFERENCE_DATA_HPP
#define CONVSUM_REFERENCE_DATA_HPP

// Published rational coefficients, stored verbatim as decimal strings.
//
// ExpansionRecord: (alpha L(q^alpha) - beta L(q^beta))^2 written as
//   constant + sum_n ( sum_delta s3[delta] sigma_3(n/delta) + sum_j cusp[j] c_j(n) ) q^n
// with c_j = a_j (level 44) or b_j (level 52).
//
// FormulaRecord: W_(alpha,beta)(n) written as
//   sum_delta s3[delta] sigma_3(n/delta) + sum (c0 + c1 n) sigma(n/delta) + sum_j cusp[j] c_j(n).

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace convsum::reference {

struct ExpansionRecord {
    std::int64_t alpha;
    std::int64_t beta;
    const char* constant;
    std::array<const char*, 6> sigma3; // over the ascending divisors of alpha*beta
    std::array<const char*, 18> cusp;  // first 15 used at level 44
    std::size_t cusp_count;
};

struct Sigma1Record {
    std::int64_t delta;
    const char* c0;
    const char* c1;
};

struct FormulaRecord {
    std::int64_t alpha;
    std::int64_t beta;
    std::array<const char*, 6> sigma3;
    std::array<Sigma1Record, 2> sigma1;
    std::array<const char*, 18> cusp;
    std::size_t cusp_count;
};

inline constexpr std::array<ExpansionRecord, 4> expansions = {{
    {1, 44, "1849",
     {"124464/61", "-577662336/40565", "68986368/5795", "-174240/61", "62064288/5795", "2525690112/5795"},
     {"1440/61", "-82927872/5795", "-887345568/5795", "-1676429568/5795", "-2804007168/5795",
      "3753380736/5795", "-13356288/19", "4226609664/5795", "-633600/19", "-527332608/1159", "7679232/19",
      "-15231744/95", "-131079168/95", "317952/19", "-12595968/95", "0", "0", "0"},
     15},
    {4, 11, "49",
     {"-110880/61", "80121888/5795", "-48338688/5795", "1817904/61", "-98480448/5795", "-27320832/5795"},
     {"110880/61", "174857472/5795", "1169427168/5795", "2114189568/5795", "3025513728/5795",
      "-3511080576/5795", "13318272/19", "-3641762304/5795", "633600/19", "663913728/1159", "-7679232/19",
      "15231744/95", "131079168/95", "-317952/19", "12595968/95", "0", "0", "0"},
     15},
    {1, 52, "2601",
     {"6109008/1243", "-456504084816/6064597", "254592/41", "-7361952/1243", "-4829528827344/6064597",
      "434738304/41"},
     {"-3066144/1243", "498157179048/6064597", "927327070704/6064597", "-442577500560/6064597",
      "-8530413669648/6064597", "-10161699732288/6064597", "-10388366352/1243", "1040832/41", "7488",
      "329100929664/147917", "27456", "-15249288510144/6064597", "17472", "47009664/41",
      "-25166713896/551327", "4167031826880/6064597", "-126425023920/6064597", "868608/41"},
     18},
    {4, 13, "81",
     {"3066144/1243", "-240061230672/6064597", "139392/41", "45798672/1243", "-53922031824/6064597",
      "20290176/41"},
     {"-3066144/1243", "212735819880/6064597", "251848851024/6064597", "-400561037808/6064597",
      "-5152459820400/6064597", "-5408748312192/6064597", "-5489355312/1243", "150336/41", "-7488",
      "151016538432/147917", "-27456", "-8224832431680/6064597", "-17472", "-544896/41",
      "-11115614088/551327", "2056953609600/6064597", "-64745693328/6064597", "-2304/41"},
     18},
}};

inline constexpr std::array<FormulaRecord, 4> formulas = {{
    {1, 44,
     {"-13/366", "501443/1784860", "-1361/5795", "55/976", "-19591/92720", "9878/17385"},
     {{{1, "1/24", "-1/176"}, {44, "1/24", "-1/4"}}},
     {"-5/10736", "35993/127490", "3081061/1019920", "66147/11590", "1217017/127490", "-3258143/254980",
      "527/38", "-917233/63745", "25/38", "20807/2318", "-303/38", "601/190", "2586/95", "-69/209",
      "497/190", "0", "0", "0"},
     15},
    {4, 11,
     {"35/976", "-25291/92720", "4178/17385", "-11/732", "15543/46360", "539/5795"},
     {{{4, "1/24", "-1/44"}, {11, "1/24", "-1/16"}}},
     {"-35/976", "-75893/127490", "-4060511/1019920", "-917617/127490", "-1313157/127490",
      "3047813/254980", "-1051/76", "790313/63745", "-25/38", "-288157/25498", "303/38", "-601/190",
      "-2586/95", "69/209", "-497/190", "0", "0", "0"},
     15},
    {1, 52,
     {"-97/1243", "731577059/582201312", "-17/164", "5899/59664", "7739629531/582201312", "-81757/492"},
     {{{1, "1/24", "-1/208"}, {52, "1/24", "-1/4"}}},
     {"31939/775632", "-6918849709/5045744704", "-19319313973/7568617056", "236419605/194067104",
      "4556844909/194067104", "1357064601/48516776", "5549341/39776", "-139/328", "-1/8",
      "-65925667/1775004", "-11/24", "2036496863/48516776", "-7/24", "-3139/164", "349537693/458704064",
      "-556494635/48516776", "67534735/194067104", "-29/82"},
     18},
    {4, 13,
     {"-31939/775632", "5001275639/7568617056", "47/6396", "24049/387816", "1123375663/7568617056",
      "-17613/2132"},
     {{{4, "1/24", "-1/52"}, {13, "1/24", "-1/16"}}},
     {"31939/775632", "-2954664165/5045744704", "-5246851063/7568617056", "8345021621/7568617056",
      "35780970975/2522872352", "4695094021/315359044", "38120523/517088", "-261/4264", "1/8",
      "-786544471/46150104", "11/24", "42837668915/1892154264", "7/24", "473/2132", "154383529/458704064",
      "-5356650025/946077132", "1348868611/7568617056", "1/1066"},
     18},
}};

template <class Records>
const auto& find_record(const Records& records, std::int64_t alpha, std::int64_t beta)
{
    for (const auto& r : records) {
        if (r.alpha == alpha && r.beta == beta) {
            return r;
        }
    }
    throw std::invalid_argument("no published data for (" + std::to_string(alpha) + "," + std::to_string(beta)
                                + ")");
}

} // namespace convsum::reference

#endif // CONVSUM_REFERENCE_DATA_HPP
