#include "json.hpp"

#include "hiero/tablet.hpp"

namespace hiero {

namespace {

using Json = nlohmann::ordered_json;

Json hieroglyph_json(const Hieroglyph& h) {
  Json support = Json::array();
  for (const GridCell& c : h.support) support.push_back({c.pane, c.row, c.col});
  return Json{{"marks", h.marks}, {"support", std::move(support)}};
}

std::vector<Hieroglyph> hieroglyphs_from(const Json& arr, const Ring& ring) {
  std::vector<Hieroglyph> out;
  for (const Json& h : arr) {
    PrimeComponent p{h.at("marks").get<std::vector<int>>()};
    for (int id : p.vars)
      if (id < 0 || static_cast<std::size_t>(id) >= ring.size())
        throw Error(ErrorCode::InvalidArgument, "tablet JSON mark out of range");
    out.push_back(make_hieroglyph(ring, p));
  }
  return out;
}

}  // namespace

std::string tablet_to_json(const Tablet& t) {
  Json ring = Json::array();
  for (const Variable& v : t.ring.variables()) {
    Json d{{"id", v.id}, {"name", v.name()}, {"base_name", v.base_name}, {"copy_index", v.copy_index}};
    if (v.grid) {
      d["pane"] = v.grid->pane;
      d["row"] = v.grid->row;
      d["col"] = v.grid->col;
    } else {
      d["pane"] = nullptr;
      d["row"] = nullptr;
      d["col"] = nullptr;
    }
    ring.push_back(std::move(d));
  }

  Json reading = Json::array();
  for (int id : t.order.reading_order()) reading.push_back(t.ring.var(id).name());
  Json order{{"kind", t.order.kind() == OrderKind::Lex ? "lex" : "grevlex"}, {"reading_order", std::move(reading)}};

  Json tablet = Json::array();
  for (const Hieroglyph& h : t.hieroglyphs) tablet.push_back(hieroglyph_json(h));
  Json all = Json::array();
  for (const Hieroglyph& h : t.all_components) all.push_back(hieroglyph_json(h));
  Json md = Json::array();
  for (const auto& [e, c] : t.multidegree.terms()) md.push_back(Json{{"exponents", e}, {"coeff", c}});

  Json j;
  j["ring"] = std::move(ring);
  j["order"] = std::move(order);
  j["tablet_size"] = t.hieroglyphs.size();
  j["equidimensional"] = t.equidimensional;
  j["tablet"] = std::move(tablet);
  j["all_components"] = std::move(all);
  j["degree"] = t.degree;
  j["multidegree"] = std::move(md);
  return j.dump(2) + "\n";
}

Tablet tablet_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, std::string("tablet JSON: ") + e.what());
  }
  try {
    Tablet t;
    std::vector<Variable> vars;
    for (const Json& d : j.at("ring")) {
      Variable v{d.at("id").get<int>(), d.at("base_name").get<std::string>(), d.at("copy_index").get<int>(),
                 std::nullopt};
      if (!d.at("pane").is_null())
        v.grid = GridCell{d.at("pane").get<int>(), d.at("row").get<int>(), d.at("col").get<int>()};
      vars.push_back(std::move(v));
    }
    t.ring = Ring(std::move(vars));

    const Json& o = j.at("order");
    const std::string kind = o.at("kind").get<std::string>();
    if (kind != "lex" && kind != "grevlex") throw Error(ErrorCode::InvalidArgument, "unknown order kind " + kind);
    std::vector<int> reading;
    for (const Json& name : o.at("reading_order")) reading.push_back(t.ring.index_of(name.get<std::string>()));
    t.order = TermOrder(kind == "lex" ? OrderKind::Lex : OrderKind::GRevLex, std::move(reading));

    t.equidimensional = j.at("equidimensional").get<bool>();
    t.hieroglyphs = hieroglyphs_from(j.at("tablet"), t.ring);
    t.all_components = hieroglyphs_from(j.at("all_components"), t.ring);
    if (j.at("tablet_size").get<std::size_t>() != t.hieroglyphs.size())
      throw Error(ErrorCode::InvalidArgument, "tablet_size disagrees with the tablet");
    t.degree = j.at("degree").get<std::int64_t>();

    const Json& md = j.at("multidegree");
    std::size_t dim = md.empty() ? 1 : md.front().at("exponents").size();
    t.multidegree = LaurentPoly(dim);
    for (const Json& term : md)
      t.multidegree.add_term(term.at("exponents").get<std::vector<int>>(), term.at("coeff").get<std::int64_t>());
    return t;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("tablet JSON: ") + e.what());
  }
}

}  // namespace hiero
