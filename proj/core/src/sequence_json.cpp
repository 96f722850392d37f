#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opxlab/error.hpp"
#include "opxlab/io.hpp"

namespace opxlab::io {

namespace {

using nlohmann::json;

cplx parse_complex(const json& v, std::size_t index) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw Error(Errc::Parse, "alphas entries must be [re, im] pairs", index);
  return {v[0].get<double>(), v[1].get<double>()};
}

template <class T>
T field_or(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("field '") + key + "': " + e.what());
  }
}

TailSpec parse_tail(const json& t, std::size_t head_size) {
  if (!t.is_object() || !t.contains("type") || !t["type"].is_string())
    throw Error(Errc::Parse, "tail must be an object with a string 'type'");
  const auto type = t["type"].get<std::string>();
  if (type == "zero") return ZeroBeyond{field_or<std::size_t>(t, "start", head_size)};
  if (type == "geronimus") {
    if (!t.contains("a")) throw Error(Errc::Parse, "geronimus tail needs 'a'");
    return ClosedFormGeronimus{field_or<double>(t, "a", 0.0)};
  }
  if (type == "truncate") {
    if (!t.contains("depth")) throw Error(Errc::Parse, "truncate tail needs 'depth'");
    return Truncate{field_or<std::size_t>(t, "depth", 0), field_or<double>(t, "tol", 1e-8)};
  }
  throw Error(Errc::Parse, "unknown tail type '" + type + "'");
}

RandomSzegoParams parse_params(const json& p) {
  RandomSzegoParams r;
  if (p.is_null()) return r;
  if (!p.is_object()) throw Error(Errc::Parse, "params must be an object");
  r.seed = field_or<std::uint64_t>(p, "seed", r.seed);
  r.decay = field_or<double>(p, "decay", r.decay);
  r.spikes = field_or<int>(p, "spikes", r.spikes);
  r.length = field_or<std::size_t>(p, "length", r.length);
  r.real = field_or<bool>(p, "real", r.real);
  const auto tail = field_or<std::string>(p, "tail", "zero");
  if (tail == "zero") r.tail = RandomTail::Zero;
  else if (tail == "truncate") r.tail = RandomTail::Truncate;
  else throw Error(Errc::Parse, "params.tail must be 'zero' or 'truncate'");
  return r;
}

}  // namespace

VerblunskySequence parse_sequence_json(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw Error(Errc::Parse, "sequence file is empty");
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, std::string("malformed sequence JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::Parse, "sequence JSON must be an object");

  if (doc.contains("preset")) {
    if (!doc["preset"].is_string()) throw Error(Errc::Parse, "preset must be a string");
    return preset(preset_from_name(doc["preset"].get<std::string>()),
                  parse_params(doc.value("params", json())));
  }
  if (!doc.contains("alphas") || !doc["alphas"].is_array())
    throw Error(Errc::Parse, "sequence JSON needs an 'alphas' array or a 'preset'");

  std::vector<cplx> alphas;
  for (std::size_t i = 0; i < doc["alphas"].size(); ++i) alphas.push_back(parse_complex(doc["alphas"][i], i));
  TailSpec tail = ZeroBeyond{alphas.size()};
  if (doc.contains("tail")) tail = parse_tail(doc["tail"], alphas.size());
  return validate(std::move(alphas), tail);
}

VerblunskySequence load_sequence(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open sequence file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence_json(buf.str());
}

std::string sequence_to_json(const VerblunskySequence& seq) {
  json doc;
  json alphas = json::array();
  for (const cplx a : seq.head()) alphas.push_back({a.real(), a.imag()});
  doc["alphas"] = alphas;
  json tail;
  tail["type"] = std::string(tail_name(seq.tail()));
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ZeroBeyond>) tail["start"] = t.start;
        else if constexpr (std::is_same_v<T, ClosedFormGeronimus>) tail["a"] = t.a;
        else {
          tail["depth"] = t.depth;
          tail["tol"] = t.tol;
        }
      },
      seq.tail());
  doc["tail"] = tail;
  return doc.dump();
}

}  // namespace opxlab::io
