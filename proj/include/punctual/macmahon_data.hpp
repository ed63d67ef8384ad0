#ifndef PUNCTUAL_MACMAHON_DATA_HPP
#define PUNCTUAL_MACMAHON_DATA_HPP

#include <vector>

#include "punctual/rational.hpp"

namespace punctual {

// Reference polynomials r_d (d = 6..26) for the discrepancy
//   binom(d+n-3, n-2) - chi(Omega^n_d) = binom(n, 4) r_d(n).
// Each entry is 1/denominator times the integer polynomial whose coefficients
// are listed in descending degree (degree d - 6). Only d <= 8 is re-derivable
// end to end at desk scale; the remaining rows are carried as read-only
// reference data from the original large-scale computation.
struct RPolyData {
    int d;
    const char* denominator;
    std::vector<const char*> coeffs_desc;
};

inline const std::vector<RPolyData>& r_poly_table() {
    static const std::vector<RPolyData> table = {
        {6, "1", {"1"}},
        {7, "1", {"1", "-2"}},
        {8, "15", {"8", "-15", "-38"}},
        {9, "5", {"1", "-1", "-26", "51"}},
        {10, "1680", {"99", "-170", "-4223", "1766", "24200"}},
        {11, "5040", {"73", "-597", "-1043", "-42051", "235834", "-281928"}},
        {12, "75600", {"233", "-6387", "23405", "-430245", "1452722", "2747472", "-10278720"}},
        {13, "151200",
         {"88", "-6245", "31097", "-236165", "-1469593", "21899170", "-64976192", "53149440"}},
        {14, "19958400",
         {"1981", "-311988", "1935414", "-3845172", "-193010871", "1493337048", "-359131804",
          "-17294094288", "31388071680"}},
        {15, "6652800",
         {"103", "-32632", "318242", "-599228", "-16650853", "-46403708", "2470215868",
          "-13748769232", "26565820320", "-14059278720"}},
        {16, "1816214400",
         {"4050", "-2415235", "44202720", "-198998202", "543569502", "-33951478911",
          "406407860400", "-886475686148", "-5844164792832", "29344150425216",
          "-36495822424320"}},
        {17, "9081072000",
         {"2713", "-2905932", "102936245", "-696362890", "3912831339", "-60103579116",
          "105375461075", "7975305525090", "-72894798639452", "241427250677248",
          "-287098838112720", "13072622068800"}},
        {18, "871782912000",
         {"32647", "-60701262", "4011851771", "-35040317130", "168916525761", "-467520183306",
          "-30485333857327", "537458552700810", "-2257598433391508", "-7856165277517032",
          "88701471042013056", "-249606482614519680", "236887198095744000"}},
        {19, "871782912000",
         {"3847", "-12105581", "1419885673", "-16448633149", "77399715691", "148861849677",
          "-12298839695941", "69445773950033", "1726606727061122", "-24456018469726196",
          "120768098399825768", "-234712358509584384", "20565176385939840",
          "334664360427801600"}},
        {20, "133382785536000",
         {"65459", "-341997999", "67993482881", "-1137851310231", "6863878273427",
          "-11397386114337", "-94916460499517", "-9137497186611453", "219397451904763774",
          "-1394004307912199964", "-2536756760556061064", "68645406748809408384",
          "-323391855641276684160", "649398353859605376000", "-483528616380614246400"}},
        {21, "29640619008000",
         {"1532", "-13095959", "4247443551", "-109750132475", "885524398299", "-4126838161517",
          "35011946515013", "-1008817082259145", "8866308376448781", "127237613967358136",
          "-2741156531918400024", "18625194630887394320", "-51388145341071878512",
          "3220254428031661440", "261708337903419912960", "-378213429350798899200"}},
        {22, "101370917007360000",
         {"524097", "-7247511368", "3717237160520", "-152184186299660", "1570134610133714",
          "-9035640753821276", "50458962657912320", "-402805530960448180",
          "-13424282139388183019", "439767764755867019156", "-3802421532685450383200",
          "-2095537058812293622960", "234480780397771174644208", "-1620421765907622698032512",
          "5090557538890888381359360", "-7614777869397455680051200",
          "4157088781168635992064000"}},
        {23, "709596419051520000",
         {"349455", "-7748519514", "6128700383656", "-396196709710600", "5160723726554410",
          "-33056117183302108", "106247070348532972", "1038864681729035240",
          "-56225386232920907185", "680070895686740877958", "6320546409234867610388",
          "-209510306821027467249680", "1856164786465966273736720", "-6687218730778391669954336",
          "-626845029527650429502016", "81776578356238362723671040",
          "-241130010521642210056166400", "230953469310039778735104000"}},
        {24, "23416681828700160000",
         {"1048460", "-37016385183", "44238216645036", "-4438506626037516", "74937699997317060",
          "-562591452104653566", "1958819321299862252", "8888255431431499608",
          "-243421963109949028680", "-6031308305222396144619", "267803044865827855728888",
          "-2966075995664738789286468", "1622425560699019170248840",
          "227322542130051193367587968", "-2127700548933581500558150176",
          "9169544904833319462449093376", "-20256824429334656867442055680",
          "19649874106231223185607270400", "-3240290359379905083850752000"}},
        {25, "4683336365740032000",
         {"18235", "-1019399825", "1810365879804", "-275863055020407", "6287711297318214",
          "-57901707711619446", "289219084251460720", "-1009283386616377538",
          "19676156331158908191", "-899803001299779118113", "13526465786506229882988",
          "81138404334872119471977", "-4340287998236452397458904", "48200906266152323175663784",
          "-214116222702857039223114912", "-96255084553962509937965232",
          "5251379089177169319784011264", "-23362801119060581617375852800",
          "45371842164302310664455168000", "-34189093301675630118532300800"}},
        {26, "25852016738884976640000",
         {"8388331", "-739204394610", "1924250747704469", "-435800072551872714",
          "13867745325067836750", "-157526730215754733908", "1001864136149464848298",
          "-5103149030391359492868", "52400005207020194241479", "-825597681149570318033226",
          "-12605867718739135261848543", "783086200071350660814554478",
          "-10676618251495171555430595632", "16369272655785444492325116816",
          "1011212771005471932089807675216", "-12110261856446073932069935204896",
          "66250904426343966025992362067072", "-187864832852428838553998453187072",
          "217829258262474632939407900354560", "111832291754129290393687615488000",
          "-368278371840755647668884078592000"}},
    };
    return table;
}

// Numerators M_k of the conjectured generating functions of the motivic-error
// sequence, coefficients ascending; the denominator for index k is
//   (1-t)^{2k+3} * prod_{i=0}^{k} (1 - (2+i) t)^{k+1-i}.
inline const std::vector<std::vector<long long>>& andrews_numerators() {
    static const std::vector<std::vector<long long>> m = {
        {1},
        {3, -7, -20, 58, -34, 6},
        {8, -79, 244, -206, 545, -5170, 15064, -19993, 13965, -5770, 1356, -144},
    };
    return m;
}

} // namespace punctual

#endif
