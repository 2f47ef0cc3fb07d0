// test_model_params.cpp — parameter validation, composites and JSON-facing helpers

#include "doctest.h"

#include <cmath>

#include "jcwind/errors.hpp"
#include "jcwind/model_params.hpp"

using namespace jcwind;

TEST_SUITE("model_params") {

TEST_CASE("reference non-Hermitian set is valid") {
    const auto p = make_params(0.9, 1.0, 0.04743, 0.5, 0.2, 0.1);
    CHECK(p.kappa == 0.5);
    CHECK_FALSE(is_hermitian(p));
    CHECK(warnings(p).empty());
}

TEST_CASE("Hermitian set is valid and detected exactly") {
    const auto p = make_params(0.9, 1.0, 0.04743, 0.0, 0.0, 0.0);
    CHECK(is_hermitian(p));
    CHECK_FALSE(is_hermitian(make_params(0.9, 1.0, 0.04743, 0.0, 0.0, 1e-300)));
}

TEST_CASE("non-positive Omega or omega is rejected with the field name") {
    try {
        make_params(0.9, 0.0, 0.1, 0.0, 0.0, 0.0);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "Omega");
        CHECK(std::string(e.what()) == "Omega must be positive");
    }
    try {
        make_params(-0.1, 1.0, 0.1, 0.0, 0.0, 0.0);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "omega");
    }
    CHECK_THROWS_AS(make_params(0.9, 1.0, std::nan(""), 0.0, 0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(make_params(0.9, 1.0, 0.1, INFINITY, 0.0, 0.0), ValidationError);
}

TEST_CASE("negative rates are accepted with a warning") {
    const auto p = make_params(0.9, 1.0, 0.1, -0.1, 0.0, 0.0);
    CHECK(warnings(p).size() == 1);
}

TEST_CASE("composites are exact and reproducible") {
    const auto p = make_params(0.9, 1.0, 0.04743, 0.5, 0.2, 0.1);
    const auto c = composites(p);
    CHECK(c.omegaT == cplx(0.9, -0.5));
    CHECK(c.OmegaT == cplx(1.0, -0.2));
    CHECK(c.gT == cplx(0.04743, -0.1));
    CHECK(c.dOmegaOmega == 1.0 - 0.9);
    CHECK(c.dKappaGamma == 0.5 - 0.2);
    const auto c2 = composites(p);
    CHECK(c2.omegaT == c.omegaT);
    CHECK(c2.gT == c.gT);
}

TEST_CASE("level index validation") {
    CHECK(make_level(0, -1).n == 0);
    CHECK(make_level(3, 1).eta == 1);
    CHECK_THROWS_AS(make_level(-1, 1), ValidationError);
    CHECK_THROWS_AS(make_level(2, 0), ValidationError);
}

TEST_CASE("coupling scale and parameter accessors") {
    CHECK(coupling_scale(0.9, 1.0) == doctest::Approx(std::sqrt(0.9) / 2.0).epsilon(1e-15));
    auto p = make_params(0.9, 1.0, 0.1, 0.5, 0.2, 0.1);
    for (Param q : {Param::omega, Param::Omega, Param::g, Param::kappa, Param::gamma, Param::Gamma}) {
        CHECK(param_from_name(param_name(q)) == q);
        CHECK(get(with(p, q, 0.375), q) == 0.375);
    }
    CHECK_THROWS_AS(param_from_name("delta"), ValidationError);
}

}
