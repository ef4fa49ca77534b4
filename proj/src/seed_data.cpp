// Generated from seeds/*.mat; kept byte-identical to those files.
#include <string>
#include <utility>
#include <vector>

namespace maxdet::detail {

const std::vector<std::pair<std::string, std::string>>& seed_texts() {
  static const std::vector<std::pair<std::string, std::string>> texts = {
      {"b4", R"SEED(# Barba matrix of order 4 over mu_3 (trivial design)
4 3
1 0 0 0
0 1 0 0
0 0 1 0
0 0 0 1
)SEED"},
      {"b10", R"SEED(# Barba matrix of order 10 over mu_3 supported on the Petersen graph
10 3
0 2 1 2 1 1 2 2 2 2
2 0 2 2 2 1 2 1 1 2
1 2 0 1 2 2 2 2 1 2
2 2 1 0 2 2 2 1 2 1
1 2 2 2 0 2 1 1 2 2
1 1 2 2 2 0 2 2 2 1
2 2 2 2 1 2 0 2 1 1
2 1 2 1 1 2 2 0 2 2
2 1 1 2 2 2 1 2 0 2
2 2 2 1 2 1 1 2 2 0
)SEED"},
      {"b13", R"SEED(# Barba matrix of order 13 over mu_3 supported on the Paley graph of order 13
13 3
0 1 2 2 1 2 2 1 1 1 1 2 2
1 0 2 2 2 1 1 1 1 2 2 1 2
2 2 0 1 2 1 2 2 1 1 1 1 2
2 2 1 0 2 2 1 1 1 1 2 2 1
1 2 2 2 0 2 1 2 2 1 1 1 1
2 1 1 2 2 0 2 1 2 2 1 1 1
2 1 2 1 1 2 0 2 1 2 2 1 1
1 1 2 1 2 1 2 0 2 1 2 2 1
1 1 1 1 2 2 1 2 0 2 1 2 2
1 2 1 1 1 2 2 1 2 0 2 1 2
1 2 1 2 1 1 2 2 1 2 0 2 1
2 1 1 2 1 1 1 2 2 1 2 0 2
2 2 2 1 1 1 1 1 2 2 1 2 0
)SEED"},
      {"m5", R"SEED(# balanced 5x5 over mu_3, |det|^2 = 1701
5 3
2 2 1 0 1
2 2 0 1 1
1 0 2 2 1
0 1 2 2 1
1 1 1 1 2
)SEED"},
      {"m8", R"SEED(# 8x8 over mu_3, |det|^2 = 2^12*3^7
8 3
2 0 0 2 1 1 0 0
0 2 2 0 1 1 0 0
0 2 0 2 0 0 1 1
2 0 2 0 0 0 1 1
0 0 1 1 2 0 2 0
0 0 1 1 0 2 0 2
1 1 0 0 2 0 0 2
1 1 0 0 0 2 2 0
)SEED"},
      {"m11", R"SEED(# 11x11 over mu_3, |det|^2 = 3^19*7*19
11 3
0 1 0 0 1 1 2 1 1 1 1
2 0 0 0 1 2 1 2 2 1 1
0 0 2 0 2 2 1 1 1 2 1
0 0 0 2 2 1 1 2 1 1 2
1 1 2 2 2 0 0 0 2 1 1
1 2 1 1 0 0 1 0 1 1 1
2 1 2 1 0 2 0 0 1 1 2
2 1 1 2 0 0 0 2 1 2 1
1 1 2 1 1 1 1 2 0 2 0
1 1 1 2 1 2 1 1 0 0 2
2 1 1 1 2 1 1 1 2 0 0
)SEED"},
      {"w11", R"SEED(# 11x11 over mu_4, |det|^2 = 2^12*5^11
11 4
3 0 1 0 1 0 1 3 2 2 3
0 0 0 3 1 2 3 0 2 3 2
1 0 0 1 2 2 2 2 1 2 3
0 3 1 0 0 2 3 2 3 2 0
1 1 2 0 0 2 2 3 2 1 2
0 2 2 2 2 0 0 2 2 2 2
1 3 2 3 2 0 3 0 1 1 0
3 0 2 2 3 2 0 0 0 1 3
2 2 1 3 2 2 1 0 0 2 1
2 3 2 2 1 2 1 1 2 0 0
3 2 3 0 2 2 0 3 1 0 0
)SEED"},
  };
  return texts;
}

}  // namespace maxdet::detail
