#include <doctest.h>

#include <sstream>

#include "cmeadow/measures.hpp"
#include "helpers.hpp"

using namespace cmeadow;

namespace {

Pmf pmf(std::initializer_list<Rational> w) { return Pmf::from_weights(w); }
const Rational h(1, 2), q1(1, 4), q3(3, 4);

}  // namespace

TEST_CASE("Pmf validation") {
  CHECK_THROWS_AS(Pmf({}), InvalidPmfError);
  CHECK_THROWS_AS(pmf({h, h, q1}), InvalidPmfError);
  CHECK_THROWS_AS(pmf({Rational(3, 2), -h}), InvalidPmfError);
  CHECK_THROWS_AS(Pmf({{"a", h}, {"a", h}}), InvalidPmfError);
  CHECK(pmf({q1, q3}).label(1) == "c2");
}

TEST_CASE("Pmf TSV") {
  std::istringstream in("# weights\nheads\t1/4\r\n\ntails\t0.75\n");
  Pmf p = read_pmf_tsv(in);
  CHECK(p.size() == 2);
  CHECK(p.weight("tails") == q3);
  std::istringstream back(write_pmf_tsv(p));
  CHECK(read_pmf_tsv(back) == p);
  std::istringstream bad("a\tx\n");
  CHECK_THROWS_AS(read_pmf_tsv(bad), InvalidPmfError);
}

TEST_CASE("Pmf grid enumeration") {
  CHECK(enumerate_pmfs(1, 4).size() == 1);
  CHECK(enumerate_pmfs(2, 4).size() == 5);
  CHECK(enumerate_pmfs(3, 4).size() == 15);
  CHECK(enumerate_pmfs(4, 4).size() == 35);
}

TEST_CASE("exact measure values") {
  CHECK(entropy(pmf({h, h}), Carrier::Exact).to_string() == "1");
  CHECK(entropy(pmf({1, 0}), Carrier::Exact).to_string() == "0");
  CHECK(entropy(pmf({q1, q1, q1, q1}), Carrier::Exact).to_string() == "2");
  CHECK(js_divergence(pmf({1, 0}), pmf({0, 1}), Carrier::Exact).to_string() == "2");
  CHECK(kl_divergence(pmf({h, h}), pmf({h, h}), Carrier::Exact).to_string() == "0");
}

TEST_CASE("approximate measure values") {
  // Reference values from an independent float computation.
  CHECK(cross_entropy(pmf({h, h}), pmf({q1, q3}), Carrier::Approx).to_double() ==
        doctest::Approx(1.207518749639422).epsilon(1e-12));
  CHECK(kl_divergence(pmf({h, h}), pmf({q1, q3}), Carrier::Approx).to_double() ==
        doctest::Approx(0.20751874963942196).epsilon(1e-12));
  CHECK(entropy(pmf({q1, q3}), Carrier::Approx).to_double() == doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("cross-entropy is bot when Q misses the support of P") {
  CHECK(cross_entropy(pmf({h, h}), pmf({0, 1}), Carrier::Exact).is_bottom());
  CHECK(cross_entropy(pmf({0, 1}), pmf({h, h}), Carrier::Exact).to_string() == "1");
  CHECK(kl_divergence(pmf({h, h}), pmf({0, 1}), Carrier::Exact).is_bottom());
  CHECK(js_divergence(pmf({h, h}), pmf({0, 1}), Carrier::Approx).is_ordinary());
  CHECK(cross_entropy(pmf({h, h}), pmf({0, 1}), Carrier::Exact, Mode::Signed).to_string() == "+inf");
  CHECK(cross_entropy(pmf({h, h}), pmf({0, 1}), Carrier::Exact, Mode::SuppesOno).to_string() == "0");
}

TEST_CASE("labels must match") {
  Pmf a({{"a", h}, {"b", h}});
  Pmf b({{"a", h}, {"c", h}});
  CHECK_THROWS_AS(cross_entropy(a, b, Carrier::Exact), LabelMismatchError);
}

TEST_CASE("builders") {
  CHECK(print(build_entropy_term(2, MeasureVariant::SeqMul)) ==
        "-(alpha(c1) |*| log2(alpha(c1)) + alpha(c2) |*| log2(alpha(c2)))");
  CHECK(build_entropy_term(3, MeasureVariant::CompositeF) == build_entropy_term(3, MeasureVariant::SeqMul));
  CHECK_THROWS_AS(build_entropy_term(2, MeasureVariant::FXY), InvalidVariantError);
  CHECK_THROWS_AS(build_cross_entropy_term(2, MeasureVariant::CompositeF), InvalidVariantError);
  CHECK_THROWS_AS(build_entropy_term(0, MeasureVariant::SeqMul), Error);
  CHECK(print(f_xy(Term::var("x"), Term::var("y"))) == "x |*| (log2(y * y)/2) + 0 * y");

  Pmf p = pmf({q1, 0, q3});
  Pmf q = pmf({h, h, 0});
  Environment env = measure_environment(p, &q);
  for (auto v : {MeasureVariant::SeqMul, MeasureVariant::SeqMulDiv, MeasureVariant::FXY, MeasureVariant::SignChain})
    CHECK(eval(build_cross_entropy_term(3, v), env, Mode::Bottom, Carrier::Approx).is_bottom());
  CHECK(eval(build_entropy_term(3, MeasureVariant::SignChain), env, Mode::Bottom, Carrier::Approx).to_double() ==
        doctest::Approx(entropy(p, Carrier::Approx).to_double()));
}

TEST_CASE("variant names") {
  CHECK(parse_variant("seqmul-div") == MeasureVariant::SeqMulDiv);
  CHECK(to_string(MeasureVariant::SignChain) == "sign-chain");
  CHECK_FALSE(parse_variant("nope"));
}

TEST_CASE("sequential expected value") {
  std::map<std::string, ExactValue> f{{"c1", ExactValue::bottom()}, {"c2", parse_exact_value("5")}};
  CHECK(seq_expected_value(pmf({0, 1}), f, Carrier::Exact).to_string() == "5");
  CHECK(seq_expected_value(pmf({h, h}), f, Carrier::Exact).is_bottom());
  CHECK_THROWS_AS(seq_expected_value(pmf({h, q1, q1}), f, Carrier::Exact), LabelMismatchError);
}
