#include "hyperres/fixtures.hpp"

#include "hyperres/parse.hpp"

namespace hyperres::fixtures {

const std::vector<ReferenceCase>& reference_cases() {
  static const std::vector<ReferenceCase> cases = {
      {
          "section0",
          5,
          {"x", "y", "z"},
          "x^3+y^3+z^3",
          {"x^5", "y^5", "z^5"},
          0,
          3,
          false,
          2,
          {
              {0, "", {"0:1", "5:3", "8:3 9:1", "9:1 10:3"}},
              {1, "", {"0:1", "25:3", "38:3 39:1", "39:1 40:3"}},
              {2, "", {"0:1", "125:3", "188:3 189:1", "189:1 190:3"}},
              {3, "", {"0:1", "625:3", "938:3 939:1", "939:1 940:3"}},
              {4, "", {"0:1", "3125:3", "4688:3 4689:1", "4689:1 4690:3"}},
          },
      },
      {
          "example44_p5",
          5,
          {"x", "y", "z"},
          "x^3+y^3+z^3",
          {"x^2", "x*z", "x*y+z^2", "y*z", "y^2"},
          0,
          4,
          true,
          2,
          {
              {0, "2:1", {"0:1", "2:5", "3:6", "5:6", "6:6"}},
              {1, "12:6", {"0:1", "10:5", "13:6", "15:6", "16:6"}},
              {2, "62:6", {"0:1", "50:5", "63:6", "65:6", "66:6"}},
              {3, "312:6", {"0:1", "250:5", "313:6", "315:6", "316:6"}},
              {4, "1562:6", {"0:1", "1250:5", "1563:6", "1565:6", "1566:6"}},
          },
      },
      {
          "example44_p2",
          2,
          {"x", "y", "z"},
          "x^3+y^3+z^3",
          {"x^2", "x*z", "x*y+z^2", "y*z", "y^2"},
          0,
          4,
          true,
          3,
          {
              {0, "2:1", {"0:1", "2:5", "3:6", "5:6", "6:6"}},
              {1, "4:7", {"0:1", "4:5", "6:12", "7:12", "9:12"}},
              {2, "9:12", {"0:1", "8:5", "11:12", "12:12", "14:12"}},
              {3, "19:12", {"0:1", "16:5", "21:12", "22:12", "24:12"}},
              {4, "39:12", {"0:1", "32:5", "41:12", "42:12", "44:12"}},
          },
      },
  };
  return cases;
}

const ReferenceCase& reference_case(const std::string& selector) {
  for (const ReferenceCase& c : reference_cases())
    if (c.selector == selector) return c;
  fail(errc::invalid_argument, "unknown reference selector: " + selector);
}

GradedMatrix section0_alternating_matrix(RingPtr ring) {
  if (ring->nvars() != 3 || ring->field().modulus() != 5)
    fail(errc::invalid_argument,
         "the displayed matrix lives over F_5 in three variables");
  static const char* rows[4][4] = {
      {"0", "-x^2", "-y^2", "-2z"},
      {"x^2", "0", "-z^2", "2y"},
      {"y^2", "z^2", "0", "-2x"},
      {"2z", "-2y", "2x", "0"},
  };
  GradedMatrix m(ring, {8, 8, 8, 9}, {10, 10, 10, 9});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Polynomial p = parse_polynomial(rows[i][j], ring);
      if (!p.is_zero()) m.set(i, j, std::move(p));
    }
  return m;
}

} // namespace hyperres::fixtures
