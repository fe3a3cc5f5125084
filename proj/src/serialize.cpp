#include "lieplan/serialize.hpp"

#include "lieplan/errors.hpp"

namespace lieplan {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::string levi_shape(const LeviDescriptor& levi) {
  const int r = levi.abelian, t = levi.tail_size();
  std::string out;
  if (r > 0) out = "gl(1)^" + std::to_string(r);
  if (t > 0) {
    if (!out.empty()) out += "+";
    out += levi.spec.family == RootFamily::C ? "sp(" + std::to_string(2 * t) + ")" : "gl(" + std::to_string(t) + ")";
  }
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["n"] = m.rows();
  out["entries"] = std::move(rows);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
      throw ParseError("matrix object needs \"n\" and \"entries\"");
    const Json& rows = j.at("entries");
    if (!rows.is_array()) throw ParseError("\"entries\" must be an array of rows");
    const std::size_t n = rows.size();
    if (j.at("n").get<std::size_t>() != n) throw DimensionError("\"n\" does not match the number of rows");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n) throw DimensionError("matrix must be square");
      for (std::size_t c = 0; c < n; ++c) m(i, c) = rational_from_json(rows[i][c]);
    }
    return m;
  });
}

Json to_json(const Weight& w) {
  Json re = Json::array(), im = Json::array();
  for (const auto& x : w.re()) re.push_back(to_json(x));
  for (const auto& x : w.im()) im.push_back(to_json(x));
  Json out;
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

Weight weight_from_json(const Json& j) {
  return guarded("weight", [&] {
    Vector re, im;
    for (const auto& x : j.at("re")) re.push_back(rational_from_json(x));
    for (const auto& x : j.at("im")) im.push_back(rational_from_json(x));
    return Weight(std::move(re), std::move(im));
  });
}

Json to_json(const BlockSpec& spec) {
  Json out = Json::array();
  for (const auto& b : spec.blocks) {
    Json o;
    if (const auto* e = std::get_if<Elliptic2>(&b)) {
      o["kind"] = "ell2";
      o["a"] = to_json(e->a);
    } else if (const auto* h = std::get_if<Hyperbolic2>(&b)) {
      o["kind"] = "hyp2";
      o["c"] = to_json(h->c);
    } else if (const auto* q = std::get_if<Quad4>(&b)) {
      o["kind"] = "quad4";
      o["p"] = to_json(q->p);
      o["q"] = to_json(q->q);
    } else {
      o["kind"] = "zero2";
    }
    out.push_back(std::move(o));
  }
  return out;
}

BlockSpec block_spec_from_json(const Json& j) {
  return guarded("block spec", [&] {
    if (!j.is_array()) throw ParseError("block spec must be a JSON list");
    BlockSpec spec;
    for (const auto& o : j) {
      const std::string kind = o.at("kind").get<std::string>();
      if (kind == "ell2") spec.blocks.push_back(Elliptic2{rational_from_json(o.at("a"))});
      else if (kind == "hyp2") spec.blocks.push_back(Hyperbolic2{rational_from_json(o.at("c"))});
      else if (kind == "quad4") spec.blocks.push_back(Quad4{rational_from_json(o.at("p")), rational_from_json(o.at("q"))});
      else if (kind == "zero2") spec.blocks.push_back(Zero2{});
      else throw ParseError("unknown block kind: " + kind);
    }
    spec.validate();
    return spec;
  });
}

Json to_json(const Witness& w) {
  Json basis = Json::array();
  for (const auto& v : w.basis) {
    Json col = Json::array();
    for (const auto& x : v) col.push_back(to_json(x));
    basis.push_back(std::move(col));
  }
  return basis;
}

std::string family_name(GroupFamily f) { return f == GroupFamily::Sp ? "sp" : "gl"; }

GroupFamily parse_family(const std::string& name) {
  if (name == "sp") return GroupFamily::Sp;
  if (name == "gl") return GroupFamily::GL;
  throw ParseError("family must be \"sp\" or \"gl\"");
}

Json to_json(const SpaceSpec& space) {
  Json out;
  out["family"] = family_name(space.family);
  out["n"] = space.n;
  out["m"] = space.m;
  out["k"] = space.k;
  return out;
}

Json to_json(const LeviDescriptor& levi) {
  Json out;
  out["type"] = levi.spec.family == RootFamily::C ? "C" : "A";
  out["rank"] = levi.spec.rank;
  out["abelian"] = levi.abelian;
  out["tail"] = levi.tail_size();
  out["shape"] = levi_shape(levi);
  return out;
}

namespace {

Json form_json(const RealForm& f) {
  Json out;
  out["s"] = f.s;
  out["t"] = f.t;
  out["u"] = f.u;
  return out;
}

Json region_json(const Region& region) {
  Json out;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, SpCartanRange>) {
          out["kind"] = "sp_cartan_range";
          out["s1"] = r.s1_values;
        } else if constexpr (std::is_same_v<T, SpBalanced>) {
          out["kind"] = "sp_balanced";
          out["s1"] = r.half;
          out["s2"] = r.half;
        } else if constexpr (std::is_same_v<T, EmptyRegion>) {
          out["kind"] = "empty";
        } else if constexpr (std::is_same_v<T, GLFull>) {
          out["kind"] = "gl_full";
        } else {
          out["kind"] = "gl_rank_cut";
          out["scalar_block_zero"] = true;
        }
      },
      region);
  return out;
}

Region region_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "sp_cartan_range") return SpCartanRange{j.at("s1").get<std::vector<int>>()};
  if (kind == "sp_balanced") return SpBalanced{j.at("s1").get<int>()};
  if (kind == "empty") return EmptyRegion{};
  if (kind == "gl_full") return GLFull{};
  if (kind == "gl_rank_cut") return GLRankCut{};
  throw ParseError("unknown region kind: " + kind);
}

DsKind ds_from_string(const std::string& s) {
  if (s == "exists") return DsKind::Exists;
  if (s == "not_determined") return DsKind::NotDetermined;
  if (s == "degenerate") return DsKind::Degenerate;
  throw ParseError("unknown discrete-series verdict: " + s);
}

}  // namespace

Json to_json(const SupportStratum& stratum) {
  Json out;
  out["form"] = form_json(stratum.form);
  out["region"] = region_json(stratum.region);
  return out;
}

Json to_json(const SupportReport& report) {
  Json out;
  out["space"] = to_json(report.space);
  out["levi"] = to_json(report.levi);
  Json strata = Json::array();
  for (const auto& s : report.strata) strata.push_back(to_json(s));
  out["strata"] = std::move(strata);
  out["ds"] = to_string(report.ds.kind);
  out["ds_reason"] = report.ds.reason;
  if (report.hc_params) {
    Json hc = Json::array();
    for (const auto& p : *report.hc_params) hc.push_back(p.a);
    out["hc_params"] = std::move(hc);
  }
  if (report.parabolics) {
    Json par = Json::array();
    for (const auto& f : *report.parabolics) {
      Json o;
      o["S"] = f.S;
      Json roots_json = Json::array();
      for (const auto& r : f.roots) roots_json.push_back(to_string(r));
      o["roots"] = std::move(roots_json);
      par.push_back(std::move(o));
    }
    out["parabolics"] = std::move(par);
  }
  return out;
}

SupportReport report_from_json(const Json& j) {
  return guarded("report", [&] {
    SupportReport r;
    const Json& sp = j.at("space");
    r.space = {parse_family(sp.at("family").get<std::string>()), sp.at("n").get<int>(), sp.at("m").get<int>(), sp.at("k").get<int>()};
    r.space.validate();
    const Json& lv = j.at("levi");
    const RootFamily fam = lv.at("type").get<std::string>() == "C" ? RootFamily::C : RootFamily::A;
    r.levi = LeviDescriptor::with_abelian({fam, lv.at("rank").get<int>()}, lv.at("abelian").get<int>());
    if (lv.at("tail").get<int>() != r.levi.tail_size() || lv.at("shape").get<std::string>() != levi_shape(r.levi))
      throw ParseError("levi fields are inconsistent");
    for (const auto& s : j.at("strata")) {
      const Json& f = s.at("form");
      r.strata.push_back({{f.at("s").get<int>(), f.at("t").get<int>(), f.at("u").get<int>()}, region_from_json(s.at("region"))});
    }
    r.ds = {ds_from_string(j.at("ds").get<std::string>()), j.at("ds_reason").get<std::string>()};
    if (j.contains("hc_params")) {
      std::vector<HCParam> hc;
      for (const auto& a : j.at("hc_params")) hc.push_back({a.get<std::vector<long>>()});
      r.hc_params = std::move(hc);
    }
    if (j.contains("parabolics")) {
      std::vector<ParabolicFamily> par;
      for (const auto& o : j.at("parabolics")) {
        ParabolicFamily f{o.at("S").get<std::vector<int>>(), {}};
        for (const auto& root : o.at("roots")) f.roots.push_back(parse_root(root.get<std::string>()));
        par.push_back(std::move(f));
      }
      r.parabolics = std::move(par);
    }
    return r;
  });
}

Json to_json(const OracleReport& report) {
  Json out;
  out["agree"] = report.agree;
  out["checks"] = report.checks;
  out["mismatches"] = report.mismatches;
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  return guarded("json", [&] { return Json::parse(text); });
}

}  // namespace lieplan
