#include "tube/zoo/spinor_data.hpp"

namespace tube::zoo {

const std::vector<std::vector<std::tuple<long, std::size_t, std::size_t>>>& spinor5_quadric_table() {
  static const std::vector<std::vector<std::tuple<long, std::size_t, std::size_t>>> table = {
      {{-1, 7, 8}, {1, 6, 9}, {-1, 5, 10}, {1, 0, 11}},
      {{-1, 4, 8}, {1, 3, 9}, {-1, 2, 10}, {1, 0, 12}},
      {{-1, 4, 6}, {1, 3, 7}, {-1, 1, 10}, {1, 0, 13}},
      {{-1, 4, 5}, {1, 2, 7}, {-1, 1, 9}, {1, 0, 14}},
      {{-1, 3, 5}, {1, 2, 6}, {-1, 1, 8}, {1, 0, 15}},
      {{-1, 7, 15}, {1, 6, 14}, {-1, 5, 13}, {1, 1, 11}},
      {{-1, 4, 15}, {1, 3, 14}, {-1, 2, 13}, {1, 1, 12}},
      {{-1, 9, 15}, {1, 8, 14}, {-1, 5, 12}, {1, 2, 11}},
      {{-1, 10, 15}, {1, 8, 13}, {-1, 6, 12}, {1, 3, 11}},
      {{-1, 10, 14}, {1, 9, 13}, {-1, 7, 12}, {1, 4, 11}},
  };
  return table;
}

}  // namespace tube::zoo
