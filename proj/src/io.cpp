#include "thetacat/io.hpp"

namespace thetacat {

Json to_json(const FiniteNCat& c) {
  Json j;
  j["level"] = c.level;
  Json cells = Json::array();
  for (int k = 0; k <= c.level; ++k) {
    Json ids = Json::array();
    for (int x = 0; x < c.counts[k]; ++x) ids.push_back(x);
    cells.push_back(ids);
  }
  j["cells"] = cells;
  Json src = Json::array(), tgt = Json::array(), ident = Json::array();
  for (int k = 1; k <= c.level; ++k) {
    src.push_back(c.src[k]);
    tgt.push_back(c.tgt[k]);
  }
  for (int k = 0; k < c.level; ++k) ident.push_back(c.ident[k]);
  j["src"] = src;
  j["tgt"] = tgt;
  j["ident"] = ident;
  Json comp = Json::array();
  for (int k = 1; k <= c.level; ++k)
    for (int jj = 0; jj < k; ++jj) {
      Json pairs = Json::array();
      for (int g = 0; g < c.counts[k]; ++g)
        for (int f = 0; f < c.counts[k]; ++f) {
          int r = c.compose(jj, k, g, f);
          if (r >= 0) pairs.push_back({g, f, r});
        }
      comp.push_back({{"j", jj}, {"k", k}, {"pairs", pairs}});
    }
  j["comp"] = comp;
  return j;
}

FiniteNCat ncat_from_json(const Json& j) {
  try {
    int level = j.at("level").get<int>();
    if (level < 0) throw std::invalid_argument("negative level");
    std::vector<int> counts;
    for (const Json& ids : j.at("cells")) counts.push_back(static_cast<int>(ids.size()));
    if (static_cast<int>(counts.size()) != level + 1) throw std::invalid_argument("cells must list every dimension");
    FiniteNCat c = FiniteNCat::with_counts(level, counts);
    const Json& src = j.at("src");
    const Json& tgt = j.at("tgt");
    const Json& ident = j.at("ident");
    if (static_cast<int>(src.size()) != level || static_cast<int>(tgt.size()) != level ||
        static_cast<int>(ident.size()) != level)
      throw std::invalid_argument("src, tgt and ident need one row per dimension");
    for (int k = 1; k <= level; ++k) {
      c.src[k] = src[k - 1].get<std::vector<int>>();
      c.tgt[k] = tgt[k - 1].get<std::vector<int>>();
      if (static_cast<int>(c.src[k].size()) != counts[k] || static_cast<int>(c.tgt[k].size()) != counts[k])
        throw std::invalid_argument("src/tgt row length mismatch in dimension " + std::to_string(k));
    }
    for (int k = 0; k < level; ++k) {
      c.ident[k] = ident[k].get<std::vector<int>>();
      if (static_cast<int>(c.ident[k].size()) != counts[k])
        throw std::invalid_argument("ident row length mismatch in dimension " + std::to_string(k));
    }
    for (const Json& block : j.at("comp")) {
      int jj = block.at("j").get<int>(), k = block.at("k").get<int>();
      if (k < 1 || k > level || jj < 0 || jj >= k) throw std::invalid_argument("bad composition block");
      for (const Json& p : block.at("pairs")) {
        auto t = p.get<std::vector<int>>();
        if (t.size() != 3) throw std::invalid_argument("composition entries are [g, f, result]");
        for (int v : t)
          if (v < 0 || v >= counts[k]) throw std::invalid_argument("composition entry out of range");
        c.set_compose(jj, k, t[0], t[1], t[2]);
      }
    }
    auto bad = validate(c);
    if (!bad.empty()) throw std::invalid_argument("not a strict n-category: " + bad.front().law + " " + bad.front().detail);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed n-category JSON: ") + e.what());
  }
}

Json to_json(const Table& t) { return Json{{"top", t.top}, {"bottom", t.bottom}}; }

Table table_from_json(const Json& j) {
  Table t;
  if (j.is_string()) return Table::parse(j.get<std::string>());
  try {
    t.top = j.at("top").get<std::vector<int>>();
    t.bottom = j.at("bottom").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table JSON: ") + e.what());
  }
  if (!t.valid()) throw std::invalid_argument("invalid table " + t.str());
  return t;
}

Json to_json(const SimplicialSetFinite& x) {
  Json j;
  j["nondegenerate"] = x.nondegenerate;
  Json faces = Json::array();
  for (std::size_t k = 1; k < x.faces.size(); ++k) {
    Json level = Json::array();
    for (const auto& simplex : x.faces[k]) {
      Json fs = Json::array();
      for (const auto& f : simplex)
        fs.push_back({{"level", f.level}, {"simplex", f.simplex}, {"degeneracy", f.degeneracy}});
      level.push_back(fs);
    }
    faces.push_back(level);
  }
  j["faces"] = faces;
  if (!x.names.empty()) j["names"] = x.names;
  return j;
}

SimplicialSetFinite simplicial_from_json(const Json& j) {
  SimplicialSetFinite x;
  try {
    x.nondegenerate = j.at("nondegenerate").get<std::vector<int>>();
    x.faces.resize(x.nondegenerate.size());
    const Json& faces = j.at("faces");
    if (faces.size() + 1 != x.nondegenerate.size() && !(x.nondegenerate.empty() && faces.empty()))
      throw std::invalid_argument("faces need one entry per positive level");
    for (std::size_t k = 1; k < x.nondegenerate.size(); ++k)
      for (const Json& simplex : faces[k - 1]) {
        std::vector<SimplicialSetFinite::Face> fs;
        for (const Json& f : simplex)
          fs.push_back({f.at("level").get<int>(), f.at("simplex").get<int>(),
                        f.at("degeneracy").get<std::vector<int>>()});
        x.faces[k].push_back(std::move(fs));
      }
    if (j.contains("names")) x.names = j.at("names").get<std::vector<std::vector<std::string>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed simplicial set JSON: ") + e.what());
  }
  auto bad = validate(x);
  if (!bad.empty()) throw std::invalid_argument("invalid simplicial set: " + bad.front());
  return x;
}

Json bounds_json(const Site& s) {
  if (auto t = dynamic_cast<const ThetaSite*>(&s))
    return Json{{"n", t->level()}, {"max_dim", t->max_dim()}, {"max_width", t->max_width()}};
  return Json{{"site", s.bounds()}};
}

Json presheaf_dump(const Presheaf& x) {
  Json j;
  j["bounds"] = bounds_json(x.site());
  Json tables = Json::array();
  const auto* theta = dynamic_cast<const ThetaSite*>(&x.site());
  for (ObjId a = 0; a < x.site().size(); ++a) {
    Json elements = Json::array();
    for (Elem e = 0; e < static_cast<Elem>(x.size(a)); ++e) elements.push_back(x.encode(a, e));
    Json entry;
    entry["table"] = theta ? to_json(theta->table(a)) : Json(x.site().label(a));
    entry["elements"] = elements;
    tables.push_back(entry);
  }
  j["tables"] = tables;
  return j;
}

Json map_json(const PresheafMap& m) {
  Json out = Json::array();
  const Site& s = m.source->site();
  for (auto [a, x] : nondegenerate_cells(*m.source))
    out.push_back({{"object", s.label(a)},
                   {"element", m.source->encode(a, x)},
                   {"image", m.target->encode(a, m.component[a][x])}});
  return out;
}

Json to_json(const RlpReport& r) {
  Json j;
  j["verdict"] = r.holds ? "lifts" : "no-lift";
  j["bounds"] = r.bounds;
  j["squares"] = r.squares;
  if (r.witness) {
    j["witness"] = {{"generator", r.witness->generator},
                    {"label", r.witness->label},
                    {"top", map_json(r.witness->top)},
                    {"bottom", map_json(r.witness->bottom)}};
  }
  return j;
}

}  // namespace thetacat
