// Palette layer: omega involution, colouring validation, coloured
// composition and its type discipline, and the walled normal form.

#include "brauerkit/palette.hpp"

#include <utility>
#include <vector>

#include "doctest.h"

namespace {

using brauerkit::ColouredDiagram;
using brauerkit::ColourList;
using brauerkit::Diagram;
using brauerkit::Palette;
using brauerkit::Permutation;

const Palette kOriented = Palette::oriented();

}  // namespace

TEST_CASE("palette omega is an involution") {
  Palette two = Palette::oriented();
  CHECK(two.size() == 2);
  for (int c = 0; c < two.size(); ++c) {
    CHECK(two.omega(two.omega(c)) == c);
    CHECK(two.orbit(c) == two.orbit(two.omega(c)));
  }
  CHECK(two.index("up") == 0);
  CHECK(two.index("dn") == 1);
  CHECK(two.index("absent") == -1);

  Palette mono = Palette::monochrome();
  CHECK(mono.size() == 1);
  CHECK(mono.omega(0) == 0);
}

TEST_CASE("oriented palettes over base colours pair up and dn per base") {
  Palette pal = Palette::oriented({"a", "b"});
  CHECK(pal.size() == 4);
  CHECK(pal.name(0) == "a.up");
  CHECK(pal.name(1) == "a.dn");
  CHECK(pal.omega(0) == 1);
  CHECK(pal.omega(2) == 3);
  CHECK(brauerkit::colour_is_up(0));
  CHECK(!brauerkit::colour_is_up(1));
}

TEST_CASE("palette constructor rejects a non-involutive omega") {
  CHECK_THROWS(Palette({"x", "y"}, {1, 0, 0}));
  CHECK_THROWS(Palette({"x", "y"}, {0, 0}));
}

TEST_CASE("make_coloured validates omega compatibility") {
  // up paired with dn across a cup is valid.
  CHECK_NOTHROW(
      brauerkit::make_coloured(kOriented, Diagram::cup(), {1, 0}, {}));
  // up paired with up across a strand is not.
  CHECK_THROWS(
      brauerkit::make_coloured(kOriented, Diagram::cup(), {0, 0}, {}));
  // Wrong colour list length.
  CHECK_THROWS(
      brauerkit::make_coloured(kOriented, Diagram::cup(), {1, 0, 0}, {}));
  // Loop orbit labels must be orbit representatives.
  CHECK_THROWS(
      brauerkit::make_coloured(kOriented, Diagram::loops(1), {}, {1}));
  CHECK_NOTHROW(
      brauerkit::make_coloured(kOriented, Diagram::loops(1), {}, {0}));
}

TEST_CASE("identity strands carry matching types") {
  ColourList w = {0, 1, 0};
  ColouredDiagram id_w = brauerkit::coloured_identity(kOriented, w);
  CHECK(brauerkit::input_type(id_w) == w);
  CHECK(brauerkit::output_type(id_w) == w);
  CHECK(brauerkit::is_valid_colouring(id_w));
}

TEST_CASE("cup and cap types") {
  ColouredDiagram cup_up = brauerkit::coloured_cup(kOriented, 0);
  CHECK(brauerkit::input_type(cup_up).empty());
  CHECK(brauerkit::output_type(cup_up) == ColourList{0, 1});

  ColouredDiagram cap_up = brauerkit::coloured_cap(kOriented, 0);
  CHECK(brauerkit::input_type(cap_up) == ColourList{0, 1});
  CHECK(brauerkit::output_type(cap_up).empty());
}

TEST_CASE("coloured compose closes loops with orbit labels") {
  ColouredDiagram cup_up = brauerkit::coloured_cup(kOriented, 0);
  ColouredDiagram cap = brauerkit::coloured_cap(kOriented, 0);
  // cup then cap: output type of cup is (up, dn), input of cap matches.
  ColouredDiagram closed = brauerkit::coloured_compose(cup_up, cap);
  CHECK(closed.base == Diagram::loops(1));
  CHECK(closed.closed_orbits == std::vector<int>{0});
}

TEST_CASE("coloured compose rejects type mismatches") {
  ColouredDiagram cup_up = brauerkit::coloured_cup(kOriented, 0);
  ColouredDiagram cap_dn = brauerkit::coloured_cap(kOriented, 1);
  // cap_dn consumes (dn, up); cup_up produces (up, dn).
  CHECK_THROWS(brauerkit::coloured_compose(cup_up, cap_dn));
}

TEST_CASE("coloured identity is neutral for composition") {
  ColourList w = {0, 1, 1};
  ColouredDiagram id_w = brauerkit::coloured_identity(kOriented, w);
  Permutation p({2, 0, 1});
  ColouredDiagram f = brauerkit::coloured_permutation(kOriented, p, w);
  CHECK(brauerkit::coloured_compose(id_w, f) == f);
  ColouredDiagram id_out =
      brauerkit::coloured_identity(kOriented, brauerkit::output_type(f));
  CHECK(brauerkit::coloured_compose(f, id_out) == f);
}

TEST_CASE("coloured permutation pushes the word along p") {
  ColourList w = {0, 1, 0};
  Permutation p({1, 2, 0});
  ColouredDiagram f = brauerkit::coloured_permutation(kOriented, p, w);
  CHECK(brauerkit::input_type(f) == w);
  ColourList out = brauerkit::output_type(f);
  for (int i = 0; i < 3; ++i) CHECK(out[p(i)] == w[i]);
}

TEST_CASE("coloured_loops uses orbit representatives") {
  // Passing the non-representative colour must still label by the orbit.
  ColouredDiagram f = brauerkit::coloured_loops(kOriented, {1, 0});
  CHECK(f.base == Diagram::loops(2));
  CHECK(f.closed_orbits == std::vector<int>{0, 0});
  CHECK(brauerkit::is_valid_colouring(f));
}

TEST_CASE("dual_object is involutive and reverses the word") {
  ColourList w = {0, 0, 1};
  ColourList dual = brauerkit::dual_object(kOriented, w);
  CHECK(dual == ColourList{0, 1, 1});
  CHECK(brauerkit::dual_object(kOriented, dual) == w);
}

TEST_CASE("coloured oplus concatenates types") {
  ColouredDiagram cup_up = brauerkit::coloured_cup(kOriented, 0);
  ColouredDiagram cap_up = brauerkit::coloured_cap(kOriented, 0);
  ColouredDiagram sum = brauerkit::coloured_oplus(cup_up, cap_up);
  CHECK(brauerkit::input_type(sum) == ColourList{0, 1});
  CHECK(brauerkit::output_type(sum) == ColourList{0, 1});
  CHECK(sum.base.sources() == 2);
  CHECK(sum.base.targets() == 2);
}

TEST_CASE("palette pushforward recolours along an equivariant map") {
  Palette big = Palette::oriented({"a", "b"});
  // Collapse both base colours onto the plain oriented palette.
  std::vector<int> phi = {0, 1, 0, 1};
  ColouredDiagram f = brauerkit::coloured_cup(big, 2);
  ColouredDiagram g = brauerkit::palette_pushforward(kOriented, phi, f);
  CHECK(g.palette == kOriented);
  CHECK(brauerkit::output_type(g) == ColourList{0, 1});
  // A non-equivariant map is rejected.
  CHECK_THROWS(brauerkit::palette_pushforward(kOriented, {0, 0, 0, 1}, f));
}

TEST_CASE("walled normal form sorts ups before downs stably") {
  ColourList w = {1, 0, 1, 0};
  auto [sorted, shuffle] = brauerkit::walled_normal_form(w);
  CHECK(sorted == ColourList{0, 0, 1, 1});
  for (int i = 0; i < 4; ++i) CHECK(sorted[shuffle(i)] == w[i]);
  // Stability: the two ups keep their relative order.
  CHECK(shuffle(1) == 0);
  CHECK(shuffle(3) == 1);
  CHECK(shuffle(0) == 2);
  CHECK(shuffle(2) == 3);
}
