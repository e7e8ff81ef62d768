#include <doctest.h>

#include "cuspidal/classify.hpp"
#include "cuspidal/gallery.hpp"

using namespace cuspidal;

namespace {

/// Entries whose reds come from printed closed forms that disagree with the definitions;
/// see the README section on known discrepancies.
bool printed_form_discrepancy(const std::string& entry, const std::string& check) {
  if (entry == "order4_helix") return check == "field H_abs";
  if (entry == "order5_helix")
    return check == "field G" || check == "field Ltil" || check == "field Ntil" || check == "field H_abs";
  if (entry == "type_T") return check == "K - pole";
  if (entry == "light_general") return check == "t*K";
  return false;
}

}  // namespace

TEST_CASE("every gallery entry reproduces its expected values") {
  for (const auto& info : list_gallery()) {
    const GalleryEntry e = make_example(info.name);
    const VerificationReport r = verify_gallery(e);
    CHECK_FALSE(r.checks.empty());
    for (const auto& c : r.checks) {
      INFO(info.name, ": ", c.name, " fitted ", c.fitted, " predicted ", c.predicted, " ", c.note);
      if (printed_form_discrepancy(info.name, c.name))
        CHECK(c.status == Status::Fail);
      else
        CHECK(c.status == Status::Pass);
    }
  }
}

TEST_CASE("all three order-four helix branches") {
  for (auto [a, sigma] : {std::pair{1.0, 1.0}, std::pair{2.0, -1.0}, std::pair{0.5, -1.0}}) {
    const GalleryEntry e = make_example("order4_helix", {{"a", a}, {"sigma", sigma}});
    const VerificationReport r = verify_gallery(e);
    for (const auto& c : r.checks) {
      INFO("a=", a, " sigma=", sigma, ": ", c.name);
      CHECK((c.status == Status::Pass) != printed_form_discrepancy("order4_helix", c.name));
    }
  }
}

TEST_CASE("gallery argument checking") {
  CHECK_THROWS_AS(make_example("no_such_example"), std::invalid_argument);
  CHECK_THROWS_AS(make_example("order5_helix", {{"gamma", 1.0}}), std::invalid_argument);
  CHECK(list_gallery().size() == 17);
  CHECK(make_example("order5_helix").params.at("beta") == 2.0);
}

TEST_CASE("order-five helix changes causal type across the singular curve") {
  const GalleryEntry e = make_example("order5_helix");
  CHECK(order_at(*e.edge, 0.0).value == 5);
  CHECK(causal_type_at(*e.edge, 0.0, 0.05) != causal_type_at(*e.edge, 0.0, -0.05));
}
