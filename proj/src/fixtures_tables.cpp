#include "coxsolomon/fixtures.hpp"

namespace coxsolomon {
namespace detail {

const char* const kH3Labels[4] = {
  "12", "123", "13", "23"};

const std::uint64_t kH3Entries[4 * 4] = {
  24, 12, 40, 32,
  12, 1, 30, 20,
  40, 30, 52, 46,
  32, 20, 46, 38,
};

const char* const kH4Labels[8] = {
  "12", "123", "1234", "124", "13", "134", "23", "234"};

const std::uint64_t kH4Entries[8 * 8] = {
  4080, 2040, 1440, 2840, 5760, 3280, 4800, 2640,
  2040, 404, 120, 1116, 4112, 1602, 2952, 958,
  1440, 120, 1, 720, 3600, 1200, 2400, 600,
  2840, 1116, 720, 1828, 4744, 2288, 3672, 1664,
  5760, 4112, 3600, 4744, 7144, 5104, 6360, 4592,
  3280, 1602, 1200, 2288, 5104, 2730, 4080, 2132,
  4800, 2952, 2400, 3672, 6360, 4080, 5484, 3504,
  2640, 958, 600, 1664, 4592, 2132, 3504, 1510,
};

const char* const kF4Labels[9] = {
  "12", "123", "1234", "124", "13", "134", "23", "234", "34"};

const std::uint64_t kF4Entries[9 * 9] = {
  396, 252, 192, 324, 552, 396, 456, 312, 600,
  252, 70, 24, 148, 364, 170, 232, 84, 312,
  192, 24, 1, 96, 288, 96, 144, 24, 192,
  324, 148, 96, 224, 432, 250, 312, 170, 396,
  552, 364, 288, 432, 600, 432, 512, 364, 552,
  396, 170, 96, 250, 432, 224, 312, 148, 324,
  456, 232, 144, 312, 512, 312, 416, 232, 456,
  312, 84, 24, 170, 364, 148, 232, 70, 252,
  600, 312, 192, 396, 552, 324, 456, 252, 396,
};

const char* const kE6Labels[15] = {
  "12", "123", "1234", "12345", "123456", "12346", "1235", "12356", "1245", "125", "13", "134", "13456", "1356", "2345"};

const std::uint64_t kE6Entries[15 * 15] = {
  29136, 21744, 16128, 13728, 12960, 14544, 18144, 15456, 17088, 23040, 26784, 19776, 14448, 17856, 15408,
  21744, 12858, 6882, 4890, 4320, 5616, 9252, 6564, 7950, 14712, 18432, 10488, 5412, 8640, 6300,
  16128, 6882, 1704, 642, 432, 1088, 3976, 1864, 2648, 9108, 12024, 4432, 840, 3144, 1380,
  13728, 4890, 642, 87, 27, 341, 2540, 926, 1378, 7092, 9432, 2632, 162, 1776, 444,
  12960, 4320, 432, 27, 1, 216, 2160, 720, 1080, 6480, 8640, 2160, 72, 1440, 270,
  14544, 5616, 1088, 341, 216, 661, 3080, 1304, 1882, 7800, 10368, 3336, 464, 2304, 852,
  18144, 9252, 3976, 2540, 2160, 3080, 6152, 3894, 4908, 11256, 14472, 6976, 2878, 5460, 3576,
  15456, 6564, 1864, 926, 720, 1304, 3894, 1996, 2690, 8700, 11448, 4320, 1104, 3132, 1602,
  17088, 7950, 2648, 1378, 1080, 1882, 4908, 2690, 3604, 10080, 13176, 5552, 1652, 4140, 2274,
  23040, 14712, 9108, 7092, 6480, 7800, 11256, 8700, 10080, 16392, 20016, 12576, 7644, 10752, 8544,
  26784, 18432, 12024, 9432, 8640, 10368, 14472, 11448, 13176, 20016, 23832, 15984, 10224, 14112, 11160,
  19776, 10488, 4432, 2632, 2160, 3336, 6976, 4320, 5552, 12576, 15984, 7888, 3088, 6264, 3864,
  14448, 5412, 840, 162, 72, 464, 2878, 1104, 1652, 7644, 10224, 3088, 250, 2052, 624,
  17856, 8640, 3144, 1776, 1440, 2304, 5460, 3132, 4140, 10752, 14112, 6264, 2052, 4644, 2784,
  15408, 6300, 1380, 444, 270, 852, 3576, 1602, 2274, 8544, 11160, 3864, 624, 2784, 1074,
};

const char* const kE7Labels[30] = {
  "12", "123", "1234", "12345", "123456", "1234567", "123457", "12346", "123467", "1235", "12356", "123567", "12357", "1245", "124567", "12457", "125", "1257", "13", "134", "13456", "134567", "13467", "1356", "2345", "234567", "23457", "24567", "2457", "257"};

const std::uint64_t kE7Entries[30 * 30] = {
  1733376, 1320192, 981504, 823296, 749568, 725760, 774912, 877824, 800256, 1111296, 936960, 827904, 969984, 1044480, 798720, 933888, 1398528, 1177344, 1612800, 1217280, 847872, 773376, 903936, 1072128, 956160, 772608, 876288, 870912, 1067520, 1421568,
  1320192, 818544, 452496, 314592, 258816, 241920, 278976, 365568, 300480, 601968, 427152, 326304, 463968, 522096, 297600, 419808, 924672, 678720, 1147680, 689184, 335136, 276576, 389328, 551424, 427680, 274896, 360672, 351792, 539280, 942336,
  981504, 452496, 129972, 50868, 29412, 24192, 38160, 84180, 50220, 271872, 134928, 67260, 167688, 191568, 46452, 123504, 577632, 347808, 761760, 312000, 61764, 36156, 100488, 218304, 111312, 34200, 76800, 67284, 198096, 585216,
  823296, 314592, 50868, 8896, 2508, 1512, 5432, 28056, 11804, 169328, 66140, 22032, 92004, 98680, 8768, 54780, 440352, 237840, 586080, 181920, 14212, 4580, 39404, 122088, 37824, 3424, 21824, 15480, 100752, 443520,
  749568, 258816, 29412, 2508, 222, 56, 1330, 15060, 5294, 131864, 45756, 12334, 67416, 68648, 3026, 35364, 381312, 194688, 508320, 134496, 5636, 1012, 23928, 89688, 19344, 402, 10096, 5892, 69264, 382464,
  725760, 241920, 24192, 1512, 56, 1, 756, 12096, 4032, 120960, 40320, 10080, 60480, 60480, 2016, 30240, 362880, 181440, 483840, 120960, 4032, 576, 20160, 80640, 15120, 126, 7560, 4032, 60480, 362880,
  774912, 278976, 38160, 5432, 1330, 756, 3198, 20466, 8122, 145800, 53716, 16286, 76680, 80272, 5490, 42828, 402240, 210000, 535680, 152448, 9396, 2674, 30192, 101976, 27168, 1806, 14992, 9900, 80976, 403200,
  877824, 365568, 84180, 28056, 15060, 12096, 20466, 52152, 28862, 208448, 93912, 41510, 121980, 135896, 25720, 83056, 489408, 278736, 649440, 232896, 35372, 19092, 64996, 159696, 69696, 17714, 45960, 38460, 139728, 494208,
  800256, 300480, 50220, 11804, 5294, 4032, 8122, 28862, 13762, 161392, 63908, 23056, 88332, 94472, 11126, 53392, 423648, 227424, 564480, 173088, 16456, 7298, 39184, 116328, 38688, 6392, 23512, 17760, 96288, 426240,
  1111296, 601968, 271872, 169328, 131864, 120960, 145800, 208448, 161392, 410472, 261352, 181688, 295176, 333824, 158296, 252776, 716544, 485568, 914400, 472032, 183680, 143496, 227136, 359904, 252720, 141928, 203488, 194280, 345264, 729216,
  936960, 427152, 134928, 66140, 45756, 40320, 53716, 93912, 63908, 261352, 138040, 78624, 167784, 188688, 60868, 128288, 547776, 332976, 718560, 297216, 75116, 51936, 108044, 212328, 120048, 50604, 88616, 80400, 194832, 555264,
  827904, 326304, 67260, 22032, 12334, 10080, 16286, 41510, 23056, 181688, 78624, 33508, 104076, 113584, 20118, 67948, 448992, 248496, 596160, 198912, 27576, 15250, 52608, 135576, 55344, 14118, 36032, 29436, 115728, 451584,
  969984, 463968, 167688, 92004, 67416, 60480, 76680, 121980, 88332, 295176, 167784, 104076, 197748, 222384, 84948, 157728, 583104, 366336, 756000, 335808, 102048, 74904, 137052, 246192, 152688, 73320, 116664, 108072, 228672, 589824,
  1044480, 522096, 191568, 98680, 68648, 60480, 80272, 135896, 94472, 333824, 188688, 113584, 222384, 254328, 91056, 178592, 642624, 410064, 835200, 385344, 111768, 78088, 153784, 281328, 171888, 76240, 129440, 120144, 263712, 653184,
  798720, 297600, 46452, 8768, 3026, 2016, 5490, 25720, 11126, 158296, 60868, 20118, 84948, 91056, 8150, 49644, 421152, 223440, 563040, 169824, 13228, 4752, 35912, 112752, 35088, 3694, 19904, 13788, 91584, 421632,
  933888, 419808, 123504, 54780, 35364, 30240, 42828, 83056, 53392, 252776, 128288, 67948, 157728, 178592, 49644, 117004, 542112, 323568, 714240, 288096, 63656, 41176, 97240, 202368, 108672, 39412, 76672, 67728, 182640, 546048,
  1398528, 924672, 577632, 440352, 381312, 362880, 402240, 489408, 423648, 716544, 547776, 448992, 583104, 642624, 421152, 542112, 1023360, 790080, 1238400, 806112, 460512, 399936, 512640, 669792, 555360, 398688, 486528, 478176, 660864, 1042560,
  1177344, 678720, 347808, 237840, 194688, 181440, 210000, 278736, 227424, 485568, 332976, 248496, 366336, 410064, 223440, 323568, 790080, 558336, 990720, 554400, 252768, 207744, 298032, 434880, 330480, 205776, 273984, 263520, 420240, 799488,
  1612800, 1147680, 761760, 586080, 508320, 483840, 535680, 649440, 564480, 914400, 718560, 596160, 756000, 835200, 563040, 714240, 1238400, 990720, 1470240, 1023840, 614880, 534240, 679680, 869760, 728640, 532800, 645120, 640800, 862560, 1267200,
  1217280, 689184, 312000, 181920, 134496, 120960, 152448, 232896, 173088, 472032, 297216, 198912, 335808, 385344, 169824, 288096, 806112, 554400, 1023840, 546624, 201792, 149952, 256704, 417408, 285120, 147648, 225792, 216576, 402048, 824832,
  847872, 335136, 61764, 14212, 5636, 4032, 9396, 35372, 16456, 183680, 75116, 27576, 102048, 111768, 13228, 63656, 460512, 252768, 614880, 201792, 20172, 8284, 47200, 135144, 48192, 7024, 28968, 21756, 113808, 463104,
  773376, 276576, 36156, 4580, 1012, 576, 2674, 19092, 7298, 143496, 51936, 15250, 74904, 78088, 4752, 41176, 399936, 207744, 534240, 149952, 8284, 2150, 28592, 99576, 25344, 1392, 13744, 8688, 78720, 400896,
  903936, 389328, 100488, 39404, 23928, 20160, 30192, 64996, 39184, 227136, 108044, 52608, 137052, 153784, 35912, 97240, 512640, 298032, 679680, 256704, 47200, 28592, 78284, 177432, 85920, 27228, 58968, 50748, 157776, 517248,
  1072128, 551424, 218304, 122088, 89688, 80640, 101976, 159696, 116328, 359904, 212328, 135576, 246192, 281328, 112752, 202368, 669792, 434880, 869760, 417408, 135144, 99576, 177432, 307128, 199536, 97872, 153744, 143544, 289920, 678528,
  956160, 427680, 111312, 37824, 19344, 15120, 27168, 69696, 38688, 252720, 120048, 55344, 152688, 171888, 35088, 108672, 555360, 330480, 728640, 285120, 48192, 25344, 85920, 199536, 92688, 23376, 62304, 53568, 179424, 565632,
  772608, 274896, 34200, 3424, 402, 126, 1806, 17714, 6392, 141928, 50604, 14118, 73320, 76240, 3694, 39412, 398688, 205776, 532800, 147648, 7024, 1392, 27228, 97872, 23376, 596, 12120, 7068, 76224, 398592,
  876288, 360672, 76800, 21824, 10096, 7560, 14992, 45960, 23512, 203488, 88616, 36032, 116664, 129440, 19904, 76672, 486528, 273984, 645120, 225792, 28968, 13744, 58968, 153744, 62304, 12120, 39088, 31224, 132096, 489600,
  870912, 351792, 67284, 15480, 5892, 4032, 9900, 38460, 17760, 194280, 80400, 29436, 108072, 120144, 13788, 67728, 478176, 263520, 640800, 216576, 21756, 8688, 50748, 143544, 53568, 7068, 31224, 22656, 120672, 478080,
  1067520, 539280, 198096, 100752, 69264, 60480, 80976, 139728, 96288, 345264, 194832, 115728, 228672, 263712, 91584, 182640, 660864, 420240, 862560, 402048, 113808, 78720, 157776, 289920, 179424, 76224, 132096, 120672, 269952, 665856,
  1421568, 942336, 585216, 443520, 382464, 362880, 403200, 494208, 426240, 729216, 555264, 451584, 589824, 653184, 421632, 546048, 1042560, 799488, 1267200, 824832, 463104, 400896, 517248, 678528, 565632, 398592, 489600, 478080, 665856, 1051776,
};

const char* const kE8Labels[39] = {
  "12", "123", "1234", "12345", "123456", "1234567", "12345678", "1234568", "123457", "1234578", "12346", "123467", "1234678", "123468", "1235", "12356", "123567", "1235678", "123568", "12357", "1245", "124567", "1245678", "12457", "125", "1257", "13", "134", "13456", "134567", "1345678", "13467", "134678", "1356", "2345", "234567", "2345678", "23457", "234578"};

const std::uint64_t kE8Entries[39 * 39] = {
  437160960, 339793920, 255744000, 214179840, 192015360, 180034560, 174182400, 183121920, 198650880, 186301440, 228648960, 205424640, 189527040, 209064960, 289059840, 244039680, 212613120, 192890880, 220078080, 252288000, 272010240, 202014720, 186301440, 240215040, 359009280, 302561280, 410572800, 316477440, 217912320, 195425280, 183121920, 232657920, 205655040, 276480000, 251596800, 192199680, 180126720, 225054720, 202245120,
  339793920, 219699360, 126612000, 88485120, 70796160, 62082720, 58060800, 64477440, 76479840, 66998880, 102617280, 82549440, 69662880, 86107680, 165227040, 118974240, 89501760, 72646560, 97133760, 128331360, 144900000, 79449120, 67004640, 114829920, 245329920, 182062080, 301190400, 189504000, 92171520, 73762560, 64434240, 106981920, 82964160, 150465600, 121875840, 71055360, 62232480, 99004320, 79833600,
  255744000, 126612000, 41733360, 17606160, 9810000, 6918480, 5806080, 7849680, 12730800, 8969280, 27612240, 16471440, 10325040, 18873840, 78967200, 41486880, 21350160, 12023040, 27315840, 50086080, 58440480, 14485680, 8979360, 37707360, 156637440, 96975360, 205804800, 92640000, 20264400, 11420880, 7825680, 31490400, 16991040, 64491840, 37313280, 10046880, 7044960, 24805440, 14928480,
  214179840, 88485120, 17606160, 3848832, 1146672, 530880, 362880, 767760, 2308128, 1171296, 10012704, 4418016, 1800768, 5760384, 49372800, 20691600, 7495728, 2620992, 11716608, 27667872, 30997632, 3241824, 1183392, 17456208, 119022336, 66309888, 159148800, 55407360, 5483088, 1850592, 785184, 13092576, 4849920, 36772128, 14054400, 1273920, 581664, 8013312, 3561984,
  192015360, 70796160, 9810000, 1146672, 143460, 29772, 13440, 80592, 611292, 236028, 5163984, 1919700, 575808, 2723772, 37176768, 13721040, 4031292, 1017696, 7220784, 19535400, 20717568, 1157268, 248676, 10890768, 100806912, 52937856, 134887680, 39456000, 2181720, 459240, 101592, 7648560, 2253600, 26098848, 6943104, 198048, 43704, 3656160, 1361136,
  180034560, 62082720, 6918480, 530880, 29772, 1596, 240, 15242, 270192, 93484, 3517500, 1213572, 320262, 1788716, 31559040, 10883304, 2868280, 617378, 5533552, 16043784, 16357344, 644524, 103974, 8315728, 91517184, 46522368, 122135040, 32179200, 1266912, 204064, 29822, 5640672, 1486784, 21407328, 4503168, 55904, 5694, 2289504, 789948,
  174182400, 58060800, 5806080, 362880, 13440, 240, 1, 6720, 181440, 60480, 2903040, 967680, 241920, 1451520, 29030400, 9676800, 2419200, 483840, 4838400, 14515200, 14515200, 483840, 69120, 7257600, 87091200, 43545600, 116121600, 29030400, 967680, 138240, 17280, 4838400, 1209600, 19353600, 3628800, 30240, 2160, 1814400, 604800,
  183121920, 64477440, 7849680, 767760, 80592, 15242, 6720, 44802, 403548, 151210, 4058736, 1455716, 413784, 2102964, 33144576, 11728152, 3241876, 758036, 6049880, 17056944, 17662080, 830428, 161932, 9104720, 93984768, 48278784, 125556480, 34310400, 1591872, 304136, 60852, 6269376, 1744056, 22766976, 5326848, 117144, 23510, 2759136, 993696,
  198650880, 76479840, 12730800, 2308128, 611292, 270192, 181440, 403548, 1353996, 658812, 7034268, 2934284, 1105044, 3929460, 41255520, 16206312, 5366368, 1687240, 8880696, 22359768, 24329280, 2034528, 670552, 13278240, 106502400, 57293184, 142352640, 44862720, 3538656, 1076372, 420692, 9679568, 3295576, 29768256, 9694080, 694728, 300392, 5386368, 2276868,
  186301440, 66998880, 8969280, 1171296, 236028, 93484, 60480, 151210, 658812, 293848, 4761696, 1824168, 598522, 2548040, 34897344, 12737136, 3749372, 997262, 6707120, 18235608, 19130976, 1140620, 304712, 10052528, 96609024, 50215296, 128977920, 36564480, 2079576, 515792, 166672, 7059296, 2127960, 24300000, 6350976, 284088, 107758, 3393840, 1320864,
  228648960, 102617280, 27612240, 10012704, 5163984, 3517500, 2903040, 4058736, 7034268, 4761696, 17498496, 9734340, 5677848, 11465916, 60756288, 29139360, 13445220, 6837720, 18242544, 36592632, 41920320, 8273472, 4773192, 25772256, 132655104, 77854848, 175737600, 69719040, 11999184, 6229488, 4057860, 20798256, 10187232, 47684160, 23837184, 5339088, 3601860, 15251184, 8629560,
  205424640, 82549440, 16471440, 4418016, 1919700, 1213572, 967680, 1455716, 2934284, 1824168, 9734340, 4762868, 2383000, 5924412, 45895296, 19414512, 7478296, 3101068, 11268400, 25837632, 28605120, 3741876, 1836244, 16401888, 112520448, 62131968, 149921280, 50734080, 5813304, 2529564, 1468100, 12513072, 5144832, 34102080, 13286016, 2029112, 1258932, 7964928, 4008432,
  189527040, 69662880, 10325040, 1800768, 575808, 320262, 241920, 413784, 1105044, 598522, 5677848, 2383000, 948816, 3182820, 36815232, 13934304, 4443900, 1404342, 7543112, 19588272, 20803008, 1643036, 609716, 11196960, 99330048, 52286976, 132503040, 39014400, 2791248, 915192, 428652, 8054880, 2701152, 26024832, 7615872, 636624, 341066, 4245936, 1838640,
  209064960, 86107680, 18873840, 5760384, 2723772, 1788716, 1451520, 2102964, 3929460, 2548040, 11465916, 5924412, 3182820, 7197180, 48708288, 21425424, 8819584, 3992964, 12776752, 27992592, 31287360, 4821348, 2559460, 18379008, 115941888, 64998528, 154172160, 54366720, 7258320, 3432572, 2111844, 14307584, 6313696, 36765504, 15634944, 2847288, 1843456, 9629280, 5103384,
  289059840, 165227040, 78967200, 49372800, 37176768, 31559040, 29030400, 33144576, 41255520, 34897344, 60756288, 45895296, 36815232, 48708288, 115584864, 75212064, 51515040, 39026592, 57994176, 83879424, 95738400, 43491840, 34903776, 71406624, 192948480, 132725760, 244166400, 133651200, 52382496, 39367392, 33130848, 64718688, 46364160, 101408256, 74620800, 37450368, 31700928, 57751776, 43913952,
  244039680, 118974240, 41486880, 20691600, 13721040, 10883304, 9676800, 11728152, 16206312, 12737136, 29139360, 19414512, 13934304, 21425424, 75212064, 41410752, 23615184, 15378384, 28820496, 49126992, 56280480, 17712384, 12747216, 37965408, 148253184, 92219520, 193363200, 86676480, 22940424, 15106488, 11729184, 32587152, 19874784, 61969248, 37613952, 13938816, 10988856, 26730960, 18091512,
  212613120, 89501760, 21350160, 7495728, 4031292, 2868280, 2419200, 3241876, 5366368, 3749372, 13445220, 7478296, 4443900, 8819584, 51515040, 23615184, 10498956, 5317000, 14573384, 30287568, 33963456, 6318552, 3760768, 20531616, 119280384, 67873152, 158112000, 57722880, 9063408, 4810340, 3251596, 16345568, 7876864, 39464928, 18058752, 4168160, 2929372, 11561520, 6611700,
  192890880, 72646560, 12023040, 2620992, 1017696, 617378, 483840, 758036, 1687240, 997262, 6837720, 3101068, 1404342, 3992964, 39026592, 15378384, 5317000, 1930534, 8569664, 21186744, 22816416, 2293132, 1008216, 12598624, 102279168, 54608640, 136339200, 41913600, 3704664, 1432848, 771600, 9287520, 3430720, 28053504, 9239040, 1092280, 645916, 5340288, 2505792,
  220078080, 97133760, 27315840, 11716608, 7220784, 5533552, 4838400, 6049880, 8880696, 6707120, 18242544, 11268400, 7543112, 12776752, 57994176, 28820496, 14573384, 8569664, 18901640, 35693808, 40300608, 9973912, 6716768, 25688512, 126604800, 74390016, 166717440, 65579520, 13435968, 8168688, 6059208, 21236736, 11676352, 45759168, 23968512, 7383336, 5608648, 16268256, 10290600,
  252288000, 128331360, 50086080, 27667872, 19535400, 16043784, 14515200, 17056944, 22359768, 18235608, 36592632, 25837632, 19588272, 27992592, 83879424, 49126992, 30287568, 21186744, 35693808, 56943600, 65026656, 24004224, 18242856, 45662208, 157102848, 100761600, 202901760, 96606720, 30030528, 21089976, 17058936, 40084896, 26291712, 70604352, 46244736, 19768752, 16158480, 34126176, 24394272,
  272010240, 144900000, 58440480, 30997632, 20717568, 16357344, 14515200, 17662080, 24329280, 19130976, 41920320, 28605120, 20803008, 31287360, 95738400, 56280480, 33963456, 22816416, 40300608, 65026656, 75382176, 26365632, 19138656, 52452096, 173882880, 113431680, 224570880, 111989760, 33873792, 22662144, 17628864, 45871008, 29095296, 81255744, 54028800, 20966976, 16495872, 38966976, 26796672,
  202014720, 79449120, 14485680, 3241824, 1157268, 644524, 483840, 830428, 2034528, 1140620, 8273472, 3741876, 1643036, 4821348, 43491840, 17712384, 6318552, 2293132, 9973912, 24004224, 26365632, 2781016, 1153396, 14736768, 109458432, 59635968, 146085120, 47696640, 4562088, 1696248, 845324, 10992384, 4115744, 31848480, 11355264, 1254496, 682704, 6556128, 3034584,
  186301440, 67004640, 8979360, 1183392, 248676, 103974, 69120, 161932, 670552, 304712, 4773192, 1836244, 609716, 2559460, 34903776, 12747216, 3760768, 1008216, 6716768, 18242856, 19138656, 1153396, 316042, 10062240, 96609024, 50216832, 128977920, 36564480, 2094384, 529212, 177668, 7072288, 2140864, 24312672, 6352128, 297368, 118388, 3402288, 1332756,
  240215040, 114829920, 37707360, 17456208, 10890768, 8315728, 7257600, 9104720, 13278240, 10052528, 25772256, 16401888, 11196960, 18379008, 71406624, 37965408, 20531616, 12598624, 25688512, 45662208, 52452096, 14736768, 10062240, 34527840, 144317952, 88473216, 189008640, 82394880, 19656384, 12217728, 9098832, 29190720, 16857120, 58146048, 33866496, 11094080, 8417920, 23387376, 15110736,
  359009280, 245329920, 156637440, 119022336, 100806912, 91517184, 87091200, 93984768, 106502400, 96609024, 132655104, 112520448, 99330048, 115941888, 192948480, 148253184, 119280384, 102279168, 126604800, 157102848, 173882880, 109458432, 96609024, 144317952, 269266176, 208760832, 323066880, 217232640, 122595840, 103799808, 93987072, 136832256, 112909824, 179071488, 152239104, 101090304, 91657728, 129238272, 109840896,
  302561280, 182062080, 96975360, 66309888, 52937856, 46522368, 43545600, 48278784, 57293184, 50215296, 77854848, 62131968, 52286976, 64998528, 132725760, 92219520, 67873152, 54608640, 74390016, 100761600, 113431680, 59635968, 50216832, 88473216, 208760832, 149380608, 259614720, 151741440, 69357312, 55273728, 48285696, 81780096, 62584320, 118874880, 92799360, 53230848, 46665984, 74884992, 60064128,
  410572800, 301190400, 205804800, 159148800, 134887680, 122135040, 116121600, 125556480, 142352640, 128977920, 175737600, 149921280, 132503040, 154172160, 244166400, 193363200, 158112000, 136339200, 166717440, 202901760, 224570880, 146085120, 128977920, 189008640, 323066880, 259614720, 380816640, 274648320, 163296000, 138620160, 125452800, 180195840, 150128640, 229547520, 201139200, 134991360, 122238720, 171590400, 146292480,
  316477440, 189504000, 92640000, 55407360, 39456000, 32179200, 29030400, 34310400, 44862720, 36564480, 69719040, 50734080, 39014400, 54366720, 133651200, 86676480, 57722880, 41913600, 65579520, 96606720, 111989760, 47696640, 36564480, 82394880, 217232640, 151741440, 274648320, 157002240, 59082240, 42251520, 34218240, 74215680, 51194880, 117849600, 87736320, 39705600, 32348160, 66055680, 48142080,
  217912320, 92171520, 20264400, 5483088, 2181720, 1266912, 967680, 1591872, 3538656, 2079576, 11999184, 5813304, 2791248, 7258320, 52382496, 22940424, 9063408, 3704664, 13435968, 30030528, 33873792, 4562088, 2094384, 19656384, 122595840, 69357312, 163296000, 59082240, 7227744, 2992704, 1604760, 15152928, 6258240, 39694752, 16608384, 2326656, 1329144, 9916080, 4887600,
  195425280, 73762560, 11420880, 1850592, 459240, 204064, 138240, 304136, 1076372, 515792, 6229488, 2529564, 915192, 3432572, 39367392, 15106488, 4810340, 1432848, 8168688, 21089976, 22662144, 1696248, 529212, 12217728, 103799808, 55273728, 138620160, 42251520, 2992704, 858964, 322976, 8804144, 2881408, 28099584, 8449920, 531624, 228012, 4642992, 1918056,
  183121920, 64434240, 7825680, 785184, 101592, 29822, 17280, 60852, 420692, 166672, 4057860, 1468100, 428652, 2111844, 33130848, 11729184, 3251596, 771600, 6059208, 17058936, 17628864, 845324, 177668, 9098832, 93987072, 48285696, 125452800, 34218240, 1604760, 322976, 76360, 6271344, 1757552, 22752288, 5300352, 138008, 38334, 2758608, 1007208,
  232657920, 106981920, 31490400, 13092576, 7648560, 5640672, 4838400, 6269376, 9679568, 7059296, 20798256, 12513072, 8054880, 14307584, 64718688, 32587152, 16345568, 9287520, 21236736, 40084896, 45871008, 10992384, 7072288, 29190720, 136832256, 81780096, 180195840, 74215680, 15152928, 8804144, 6271344, 24146240, 12973696, 51653952, 27668736, 7839456, 5731696, 18505056, 11352048,
  205655040, 82964160, 16991040, 4849920, 2253600, 1486784, 1209600, 1744056, 3295576, 2127960, 10187232, 5144832, 2701152, 6313696, 46364160, 19874784, 7876864, 3430720, 11676352, 26291712, 29095296, 4115744, 2140864, 16857120, 112909824, 62584320, 150128640, 51194880, 6258240, 2881408, 1757552, 12973696, 5530880, 34602912, 13800960, 2368040, 1534416, 8413056, 4383360,
  276480000, 150465600, 64491840, 36772128, 26098848, 21407328, 19353600, 22766976, 29768256, 24300000, 47684160, 34102080, 26024832, 36765504, 101408256, 61969248, 39464928, 28053504, 45759168, 70604352, 81255744, 31848480, 24312672, 58146048, 179071488, 118874880, 229547520, 117849600, 39694752, 28099584, 22752288, 51653952, 34602912, 87158304, 60018048, 26369280, 21546720, 44713152, 32272992,
  251596800, 121875840, 37313280, 14054400, 6943104, 4503168, 3628800, 5326848, 9694080, 6350976, 23837184, 13286016, 7615872, 15634944, 74620800, 37613952, 18058752, 9239040, 23968512, 46244736, 54028800, 11355264, 6352128, 33866496, 152239104, 92799360, 201139200, 87736320, 16608384, 8449920, 5300352, 27668736, 13800960, 60018048, 33041664, 7168896, 4625280, 21125376, 11822976,
  192199680, 71055360, 10046880, 1273920, 198048, 55904, 30240, 117144, 694728, 284088, 5339088, 2029112, 636624, 2847288, 37450368, 13938816, 4168160, 1092280, 7383336, 19768752, 20966976, 1254496, 297368, 11094080, 101090304, 53230848, 134991360, 39705600, 2326656, 531624, 138008, 7839456, 2368040, 26369280, 7168896, 256784, 72328, 3819456, 1460880,
  180126720, 62232480, 7044960, 581664, 43704, 5694, 2160, 23510, 300392, 107758, 3601860, 1258932, 341066, 1843456, 31700928, 10988856, 2929372, 645916, 5608648, 16158480, 16495872, 682704, 118388, 8417920, 91657728, 46665984, 122238720, 32348160, 1329144, 228012, 38334, 5731696, 1534416, 21546720, 4625280, 72328, 11002, 2368224, 830520,
  225054720, 99004320, 24805440, 8013312, 3656160, 2289504, 1814400, 2759136, 5386368, 3393840, 15251184, 7964928, 4245936, 9629280, 57751776, 26730960, 11561520, 5340288, 16268256, 34126176, 38966976, 6556128, 3402288, 23387376, 129238272, 74884992, 171590400, 66055680, 9916080, 4642992, 2758608, 18505056, 8413056, 44713152, 21125376, 3819456, 2368224, 13069968, 6915312,
  202245120, 79833600, 14928480, 3561984, 1361136, 789948, 604800, 993696, 2276868, 1320864, 8629560, 4008432, 1838640, 5103384, 43913952, 18091512, 6611700, 2505792, 10290600, 24394272, 26796672, 3034584, 1332756, 15110736, 109840896, 60064128, 146292480, 48142080, 4887600, 1918056, 1007208, 11352048, 4383360, 32272992, 11822976, 1460880, 830520, 6915312, 3292116,
};

}  // namespace detail

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> tables = [] {
    std::vector<Fixture> v;
    v.push_back(make_fixture("H3", detail::kH3Labels, detail::kH3Entries, 4,
                             "published D' table for H3 (4x4, submatrix over Coxeter classes with |I| >= 2)", true));
    v.push_back(make_fixture("H4", detail::kH4Labels, detail::kH4Entries, 8,
                             "published D' table for H4 (8x8, submatrix over Coxeter classes with |I| >= 2)", true));
    v.push_back(make_fixture("F4", detail::kF4Labels, detail::kF4Entries, 9,
                             "published D' table for F4 (9x9, submatrix over Coxeter classes with |I| >= 2)", true));
    v.push_back(make_fixture("E6", detail::kE6Labels, detail::kE6Entries, 15,
                             "published D' table for E6 (15x15, submatrix over Coxeter classes with |I| >= 2)", true));
    v.push_back(make_fixture("E7", detail::kE7Labels, detail::kE7Entries, 30,
                             "published D' table for E7 (30x30); not recomputed here, consistency-checked only", false));
    v.push_back(make_fixture("E8", detail::kE8Labels, detail::kE8Entries, 39,
                             "published D' table for E8 (39x39); not recomputed here, consistency-checked only", false));
    return v;
  }();
  return tables;
}

}  // namespace coxsolomon
