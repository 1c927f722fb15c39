#include "schur/serialize.hpp"

namespace schur {

using nlohmann::json;

void to_json(json& j, const Interval& v) { j = json{{"lo", v.lo}, {"hi", v.hi}}; }

void from_json(const json& j, Interval& v) {
  j.at("lo").get_to(v.lo);
  j.at("hi").get_to(v.hi);
}

void to_json(json& j, const Coloring& v) { j = json{{"interval", v.interval()}, {"bits", v.str()}}; }

void from_json(const json& j, Coloring& v) {
  v = make_coloring(j.at("interval").get<Interval>(), j.at("bits").get<std::string>());
}

void to_json(json& j, const SolutionBreakdown& v) {
  j = json{{"ppp", v.ppp}, {"qqq", v.qqq}, {"qqp", v.qqp}, {"qpp", v.qpp}, {"total", v.total}};
}

void from_json(const json& j, SolutionBreakdown& v) {
  j.at("ppp").get_to(v.ppp);
  j.at("qqq").get_to(v.qqq);
  j.at("qqp").get_to(v.qqp);
  j.at("qpp").get_to(v.qpp);
  j.at("total").get_to(v.total);
}

void to_json(json& j, const ReductionParams& v) {
  j = json{{"t", v.t},   {"N", v.N},         {"a", v.a},        {"eps", v.eps},
           {"q", v.q},   {"s0", v.s0()},     {"s1", v.s1()}};
}

void from_json(const json& j, ReductionParams& v) {
  v = make_params(j.at("t").get<std::int64_t>(), j.at("N").get<std::int64_t>(),
                  j.at("a").get<std::int64_t>(), j.at("eps").get<std::int64_t>(),
                  j.at("q").get<std::int64_t>());
}

void to_json(json& j, const Minimizer& v) {
  if (const auto* m = std::get_if<ClassSizeChoice>(&v)) {
    j = json{{"m", m->m}};
  } else {
    const auto& b = std::get<BlockChoice>(v);
    j = json{{"eps", b.eps}, {"a", b.a}, {"q", b.q}};
  }
}

void from_json(const json& j, Minimizer& v) {
  if (j.contains("m")) {
    v = ClassSizeChoice{j.at("m").get<std::int64_t>()};
  } else {
    v = BlockChoice{j.at("eps").get<std::int64_t>(), j.at("a").get<std::int64_t>(),
                    j.at("q").get<std::int64_t>()};
  }
}

void to_json(json& j, const MultiplicityCertificate& v) {
  j = json{{"k", v.k},
           {"n", v.n},
           {"value", v.value},
           {"regime", std::string(regime_name(v.regime))},
           {"minimizer", v.minimizer},
           {"witness", v.witness},
           {"recount", v.recount ? json(*v.recount) : json(nullptr)}};
}

void from_json(const json& j, MultiplicityCertificate& v) {
  j.at("k").get_to(v.k);
  j.at("n").get_to(v.n);
  j.at("value").get_to(v.value);
  v.regime = parse_regime(j.at("regime").get<std::string>());
  v.minimizer = j.at("minimizer").get<Minimizer>();
  v.witness = j.at("witness").get<Coloring>();
  const auto& rc = j.at("recount");
  v.recount = rc.is_null() ? std::nullopt : std::optional<Count>(rc.get<Count>());
}

void to_json(json& j, const SolutionTriple& v) { j = json::array({v.x1, v.x2, v.x3}); }

void to_json(json& j, const OracleResult& v) {
  j = json{{"interval", v.interval},
           {"minimum", v.minimum},
           {"minimizer_count", v.minimizer_count},
           {"sample_minimizers", v.sample_minimizers},
           {"colorings_scanned", v.colorings_scanned}};
}

void to_json(json& j, const ValidationRecord& v) {
  j = json{{"k", v.k},
           {"n", v.n},
           {"reduction_value", v.reduction_value},
           {"oracle_value", v.oracle_value},
           {"pass", v.pass},
           {"millis", v.millis}};
  if (v.offending) j["offending"] = *v.offending;
}

void to_json(json& j, const RatioRecord& v) {
  j = json{{"k", v.k},
           {"n", v.n},
           {"value", v.value},
           {"ratio", v.ratio},
           {"deviation", v.deviation}};
}

}  // namespace schur
