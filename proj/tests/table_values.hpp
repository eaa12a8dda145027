#pragma once

// Known values of R(c, a), used as expected results.

#include <array>
#include <map>
#include <vector>

namespace tables {

// R(c, a) for a = 1..30, c = 3..7.
inline const std::map<int, std::vector<const char*>> kSmallA = {
    {3, {"1", "3", "8", "13", "20", "29", "39", "50", "64", "78", "94", "112", "131", "151", "174",
         "197", "222", "249", "277", "306", "338", "370", "404", "440", "477", "515", "556", "597",
         "640", "685"}},
    {4, {"1", "4", "13", "34", "68", "121", "197", "299", "432", "600", "806", "1055", "1352",
         "1698", "2100", "2561", "3085", "3675", "4338", "5074", "5891", "6790", "7777", "8854",
         "10029", "11300", "12677", "14160", "15756", "17465"}},
    {5, {"1", "5", "20", "68", "190", "441", "907", "1690", "2916", "4734", "7310", "10836",
         "15528", "21619", "29365", "39045", "50961", "65434", "82809", "103453", "127751",
         "156117", "188980", "226794", "270037", "319204", "374813", "437409", "507553",
         "585831"}},
    {6, {"1", "6", "29", "121", "441", "1384", "3736", "8934", "19298", "38268", "70685",
         "123057", "203764", "323383", "494925", "734034", "1059330", "1492653", "2059229",
         "2788044", "3712081", "4868468", "6298878", "8049751", "10172443", "12723627",
         "15765529", "19366035", "23599151", "28545198"}},
    {7, {"1", "7", "39", "197", "907", "3736", "13530", "42931", "120892", "306120", "706642",
         "1506016", "2996398", "5618515", "10008899", "17053898", "27950691", "44275741",
         "68059684", "101869637", "148898469", "213061109", "299097442", "412683316",
         "560547117", "750594650", "992040210", "1295545409", "1673363704", "2139494240"}},
};

// R(c, a) for a = 100, 200, ..., 1000, c = 3..6.
inline const std::map<int, std::vector<const char*>> kSpotRows = {
    {3, {"7533", "30066", "67600", "120133", "187666", "270200", "367733", "480266", "607800",
         "750333"}},
    {4, {"665370", "5355739", "18112775", "42978145", "83993514", "145200550", "230640920",
         "344356289", "490388325", "672778695"}},
    {5, {"84971972", "1407988534", "7211812220", "22926705532", "56170430969", "116748251030",
         "216652928217", "370064725029", "593351403965", "905068227527"}},
    {6, {"17929736129", "627979574932", "4914131994972", "21021167741959", "64731346381612",
         "162041086855752", "351737648034289", "687975809274792", "1242854550978032",
         "2108993735138119"}},
};

// R(8, a) for a = 1..10.
inline const std::vector<const char*> kR8 = {"1",     "8",      "50",     "299",    "1690",
                                             "8934",  "42931",  "183303", "690896", "2310366"};

// R(9, a) for a = 1..9.
inline const std::vector<const char*> kR9 = {"1",     "9",      "64",     "432",    "2916",
                                             "19298", "120892", "690896", "3517049"};

// Connection graphs, distinct cycle indices, graphs with trivial action;
// c = 2..8.
struct Census {
  int c;
  unsigned long graphs;
  unsigned long cycle_indices;
  unsigned long trivial;
};
inline const std::array<Census, 7> kCensus = {{{2, 2, 1, 0},
                                               {3, 5, 2, 0},
                                               {4, 16, 6, 0},
                                               {5, 72, 11, 2},
                                               {6, 592, 26, 101},
                                               {7, 10808, 38, 4716},
                                               {8, 552251, 87, 400840}}};

}  // namespace tables
