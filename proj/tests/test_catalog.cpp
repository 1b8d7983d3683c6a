#include <algorithm>
#include <set>

#include "doctest.h"
#include "json.hpp"

#include "hslab/ambient.hpp"
#include "hslab/catalog.hpp"
#include "hslab/errors.hpp"
#include "theorem_items.hpp"

using namespace hsl;

namespace {

std::set<std::string> ids(const std::vector<FamilySummary>& v) {
    std::set<std::string> out;
    for (const auto& s : v) out.insert(s.id);
    return out;
}

}  // namespace

TEST_SUITE("catalog") {
    TEST_CASE("registry size and filters") {
        CHECK(registry().size() >= 40);
        const auto flat = ids(list_families({AmbientKind::flat, std::nullopt, std::nullopt}));
        for (const char* id : {"cn.warped.a", "cn.warped.b", "c2.type1.torus", "c2.type1.exp", "c2.type2.exp",
                               "c2.type2.exp0", "c2.bessel"})
            CHECK(flat.count(id) == 1);
        for (const auto& s : list_families({std::nullopt, Tier::A, std::nullopt})) {
            CAPTURE(s.id);
            CHECK(s.id.rfind("chn.", 0) != 0);
            CHECK(s.tier == Tier::A);
        }
        for (const auto& s : list_families({std::nullopt, std::nullopt, 3})) CHECK(s.n == 3);
    }

    TEST_CASE("manifest covers every theorem item exactly once") {
        const auto manifest = nlohmann::json::parse(registry_manifest_json());
        std::multiset<std::string> seen;
        for (const auto& f : manifest) {
            CHECK(f.contains("paper_tag"));
            CHECK(f.contains("params"));
            if (f.at("tier") != "control") seen.insert(f.at("id").get<std::string>());
        }
        CHECK(seen.size() == kTheoremItems.size());
        for (const auto& id : kTheoremItems) CHECK_MESSAGE(seen.count(id) == 1, id);
        for (const auto& f : registry()) CHECK(f.theorem_item == (f.tier != Tier::Control));
    }

    TEST_CASE("parameter admissibility") {
        CHECK_THROWS_AS(instantiate("ch2.type2.a", {{"m", 1.0}}), AdmissibilityError);
        CHECK_THROWS_AS(instantiate("cp2.type2.sech", {{"m", -2.0}}), AdmissibilityError);
        CHECK_THROWS_AS(instantiate("ch2.type2.c", {{"m", 0.5}}), AdmissibilityError);
        CHECK_NOTHROW(instantiate("ch2.type2.c", {{"m", 0.7}}));
        CHECK_THROWS_AS(instantiate("cn.warped.a", {{"n", 2}, {"l", 3}}), AdmissibilityError);
        CHECK_THROWS_AS(instantiate("cn.warped.a", {{"n", 2.5}}), AdmissibilityError);
        CHECK_THROWS_AS(instantiate("no.such.family"), NotFoundError);
        CHECK_THROWS_AS(instantiate("cpn.warped.a", {}, "no-such-variant"), NotFoundError);
    }

    TEST_CASE("samples stay inside the admissible region") {
        const Immersion imm = instantiate("ch2.type2.a", {{"m", 2.0}});
        GridSpec grid;
        grid.count = 500;
        grid.margin = 0.05;
        for (const auto& p : sample_domain(imm, grid)) CHECK(std::abs(4 * p[0] + p[1]) > 0.05);
        const Immersion sec = instantiate("ch2.type2.c", {});
        for (const auto& p : sample_domain(sec, grid)) CHECK(sec.par.domain.admits(p, 0.05));
    }

    TEST_CASE("sampling is deterministic in the seed") {
        const Immersion imm = instantiate("cpn.warped.a", {});
        GridSpec grid;
        grid.count = 50;
        CHECK(sample_domain(imm, grid) == sample_domain(imm, grid));
        GridSpec other = grid;
        other.seed = 2;
        CHECK(sample_domain(imm, grid) != sample_domain(imm, other));
        grid.mode = SamplingMode::uniform;
        CHECK(sample_domain(imm, grid).size() == 50);
    }

    TEST_CASE("unsatisfiable margins are reported") {
        const Immersion imm = instantiate("ch2.type2.a", {});
        GridSpec grid;
        grid.margin = 100;
        CHECK_THROWS_AS(sample_domain(imm, grid), SamplingError);
    }

    TEST_CASE("seeded parameter draws are admissible and reproducible") {
        for (const auto& f : registry()) {
            if (f.tier != Tier::A) continue;
            CAPTURE(f.id);
            const ParamSet p = draw_params(f, 17);
            CHECK(p == draw_params(f, 17));
            CHECK_NOTHROW(f.check_admissible(p));
        }
    }

    TEST_CASE("composition over an inner surface") {
        const Immersion inner = instantiate("cp2.type2.sech", {{"m", 4.0}});
        const Immersion imm = compose_with_inner("cp3.nullity.5", inner);
        CHECK(imm.dim() == 3);
        CHECK(imm.ambient.kind == AmbientKind::spherical);
        GridSpec grid;
        grid.count = 40;
        for (const auto& p : sample_domain(imm, grid)) {
            const CVec z = imm(p);
            CHECK(quadric_residual(z, imm.ambient) < 1e-9);
            const CVec w = inner({p[1], p[2]});
            CHECK((z.tail(3) - w * std::cos(p[0])).norm() < 1e-14);
        }
        const CVec at_zero = imm({0.0, 0.3, -0.2});
        CHECK(std::abs(at_zero[0]) == 0.0);

        const Immersion hyp = compose_with_inner("ch3.nullity.10", instantiate("ch2.type2.e", {}));
        for (const auto& p : sample_domain(hyp, grid)) CHECK(quadric_residual(hyp(p), hyp.ambient) < 1e-9);

        CHECK_THROWS_AS(compose_with_inner("ch3.nullity.10", inner), CompositionError);
        CHECK_THROWS_AS(compose_with_inner("cp2.type1", inner), CompositionError);
    }

    TEST_CASE("every family instantiates with its smoke parameters") {
        for (const auto& f : registry()) {
            CAPTURE(f.id);
            try {
                const Immersion imm = instantiate(f, f.smoke_params());
                CHECK(imm.dim() == f.dim(imm.params));
            } catch (const EvaluationError&) {
                CHECK(f.variants.size() > 1);
            }
        }
    }
}
