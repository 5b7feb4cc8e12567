#include "schur/report.hpp"

#include <sstream>

#include "schur/errors.hpp"

namespace schur {

TraceEntry trace_entry(const TraceStep& step) {
  return {rule_name(step.rule), step.subject, to_string(step.result), step.detail};
}

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["input"] = r.input;
  j["result"] = r.result;
  Json trace = Json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"rule", t.rule}, {"subject", t.subject}, {"result", t.result}, {"detail", t.detail}});
  j["trace"] = std::move(trace);
  j["check"] = r.check ? Json{{"oracle", to_json(r.check->oracle)}, {"agrees", r.check->agrees}}
                       : Json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.result = j.at("result");
    for (const auto& t : j.at("trace"))
      r.trace.push_back({t.at("rule").get<std::string>(), t.at("subject").get<std::string>(),
                         t.at("result").get<std::string>(), t.at("detail").get<std::string>()});
    if (!j.at("check").is_null())
      r.check = OracleCheck{abelian_from_json(j.at("check").at("oracle")),
                            j.at("check").at("agrees").get<bool>()};
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string group_text(const Json& g) { return g.at("text").get<std::string>(); }

}  // namespace

std::string render_text(const Report& r, bool with_trace) {
  std::ostringstream out;
  const Json& res = r.result;
  if (r.command == "expr") {
    out << "G = " << res.at("group").get<std::string>() << '\n';
    out << "G_ab = " << group_text(res.at("abelianization")) << '\n';
    out << "M(G) = " << group_text(res.at("multiplier"));
    if (r.check)
      out << (r.check->agrees ? " (oracle agrees)"
                              : " (oracle DISAGREES: " + to_string(r.check->oracle) + ")");
    out << '\n';
  } else if (r.command == "pres") {
    out << "presentation: " << res.at("presentation").get<std::string>() << '\n';
    out << "G_ab = " << group_text(res.at("abelianization")) << '\n';
    out << "h2_complex = " << group_text(res.at("h2_complex")) << '\n';
    out << "relator_bound = " << res.at("relator_bound").get<std::size_t>() << '\n';
    out << "rank_bound = " << res.at("rank_bound").get<std::size_t>() << '\n';
    const bool exact = res.at("exact").get<bool>();
    out << "exact = " << (exact ? "true" : "false") << '\n';
    out << (exact ? "M(G) = " + group_text(res.at("h2_complex")) + " (presentation flagged aspherical)"
                  : "M(G) is a quotient of h2_complex (upper bound only)")
        << '\n';
  } else if (r.command == "oracle") {
    out << "G = " << res.at("group").get<std::string>() << " (order " << res.at("order").get<std::size_t>()
        << ")\n";
    out << "H_1 = " << group_text(res.at("h1")) << '\n';
    out << "H_2 = M(G) = " << group_text(res.at("h2")) << '\n';
  } else if (r.command == "amalgam") {
    out << "sub = coker(alpha) = " << group_text(res.at("sub"))
        << (res.at("sub_exact").get<bool>() ? "" : " (upper bound)") << '\n';
    out << "quot = ker(beta) = " << group_text(res.at("quot")) << '\n';
    out << "determined = " << (res.at("determined").get<bool>() ? "true" : "false") << '\n';
    if (!res.at("value").is_null()) out << "M(G) = " << group_text(res.at("value")) << '\n';
    for (const auto& note : res.at("notes")) out << "note: " << note.get<std::string>() << '\n';
  }
  if (with_trace && !r.trace.empty()) {
    out << "trace:\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      const auto& t = r.trace[i];
      out << "  " << i + 1 << ". [" << t.rule << "] " << t.subject << " -> " << t.result;
      if (!t.detail.empty()) out << " : " << t.detail;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace schur
