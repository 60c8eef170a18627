#include "udg/verdict.hpp"

#include "udg/errors.hpp"

namespace udg::realize {

namespace {

struct KindName {
  CertificateKind kind;
  const char* name;
};

constexpr KindName kKinds[] = {
    {CertificateKind::LinearForest, "LinearForest"},
    {CertificateKind::TreeUnicyclic, "TreeUnicyclic"},
    {CertificateKind::NumericalEmbedding, "NumericalEmbedding"},
    {CertificateKind::ForbiddenSubgraph, "ForbiddenSubgraph"},
    {CertificateKind::CycleIn1D, "CycleIn1D"},
    {CertificateKind::HighDegreeIn1D, "HighDegreeIn1D"},
};

Answer parse_answer(const std::string& s) {
  if (s == "YES") return Answer::Yes;
  if (s == "NO") return Answer::No;
  if (s == "UNKNOWN") return Answer::Unknown;
  throw InvalidInput("unknown verdict answer \"" + s + "\"");
}

CertificateKind parse_kind(const std::string& s) {
  for (const auto& k : kKinds) {
    if (s == k.name) return k.kind;
  }
  throw InvalidInput("unknown certificate kind \"" + s + "\"");
}

}  // namespace

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    case Answer::Unknown: return "UNKNOWN";
  }
  return "?";
}

const char* to_string(CertificateKind k) {
  for (const auto& entry : kKinds) {
    if (entry.kind == k) return entry.name;
  }
  return "?";
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["answer"] = to_string(v.answer);
  j["dimension"] = v.dimension;
  if (!v.certificate) {
    j["certificate"] = nullptr;
    return j;
  }
  const Certificate& c = *v.certificate;
  nlohmann::json cj;
  cj["kind"] = to_string(c.kind);
  if (!c.name.empty()) cj["name"] = c.name;
  if (c.kind == CertificateKind::LinearForest) {
    cj["witness"] = c.paths;
  } else if (c.kind == CertificateKind::NumericalEmbedding && c.embedding) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < c.embedding->size(); ++i) {
      const auto p = c.embedding->point(i);
      rows.push_back(std::vector<double>(p.begin(), p.end()));
    }
    cj["witness"] = std::move(rows);
  } else {
    cj["witness"] = c.witness;
  }
  if (c.residual) cj["residual"] = *c.residual;
  j["certificate"] = std::move(cj);
  return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
  try {
    Verdict v;
    v.answer = parse_answer(j.at("answer").get<std::string>());
    v.dimension = j.at("dimension").get<std::size_t>();
    const auto& cj = j.at("certificate");
    if (cj.is_null()) return v;
    Certificate c;
    c.kind = parse_kind(cj.at("kind").get<std::string>());
    if (cj.contains("name")) c.name = cj["name"].get<std::string>();
    if (cj.contains("residual")) c.residual = cj["residual"].get<double>();
    const auto& w = cj.at("witness");
    if (c.kind == CertificateKind::LinearForest) {
      c.paths = w.get<std::vector<std::vector<Vertex>>>();
    } else if (c.kind == CertificateKind::NumericalEmbedding) {
      std::vector<double> flat;
      for (const auto& row : w) {
        if (row.size() != v.dimension) throw InvalidInput("embedding row does not match dimension");
        for (const auto& x : row) flat.push_back(x.get<double>());
      }
      c.embedding = geom::PointConfig(v.dimension, std::move(flat));
    } else {
      c.witness = w.get<std::vector<Vertex>>();
    }
    v.certificate = std::move(c);
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed verdict JSON: ") + e.what());
  }
}

}  // namespace udg::realize
