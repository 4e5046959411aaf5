#include "wlab/checkpoint.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wlab/error.hpp"

namespace wlab {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* primary_key(SearchKind k) { return k == SearchKind::Wolstenholme ? "r1_valuation" : "residual_valuation"; }
const char* recheck_key(SearchKind k) {
  return k == SearchKind::Wolstenholme ? "binom_residual_valuation" : "recheck_residual_valuation";
}

[[noreturn]] void corrupt(const std::string& what) { throw Error(ErrorCode::CheckpointCorrupt, what); }

template <class T>
T field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) corrupt(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    corrupt(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string checkpoint_to_json(const Checkpoint& c) {
  ordered_json hits = ordered_json::array();
  for (const auto& h : c.hits) {
    hits.push_back({{"p", h.p}, {"witness", {{primary_key(c.kind), h.indicator}, {recheck_key(c.kind), h.recheck}}}});
  }
  ordered_json j = {{"schema_version", c.schema_version},
                    {"kind", to_string(c.kind)},
                    {"lo", c.lo},
                    {"hi", c.hi},
                    {"last_completed_prime", c.last_completed_prime},
                    {"completed", c.completed},
                    {"hits", hits},
                    {"updated_at", c.updated_at}};
  return j.dump(2) + "\n";
}

Checkpoint checkpoint_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    corrupt(std::string("not valid JSON: ") + e.what());
  }
  Checkpoint c;
  c.schema_version = field<int>(j, "schema_version");
  if (c.schema_version != kCheckpointSchema) corrupt("unsupported schema_version " + std::to_string(c.schema_version));
  try {
    c.kind = parse_search_kind(field<std::string>(j, "kind"));
  } catch (const Error&) {
    corrupt("unknown kind");
  }
  c.lo = field<std::uint64_t>(j, "lo");
  c.hi = field<std::uint64_t>(j, "hi");
  c.last_completed_prime = field<std::uint64_t>(j, "last_completed_prime");
  c.completed = j.contains("completed") ? field<bool>(j, "completed") : false;
  c.updated_at = field<std::string>(j, "updated_at");
  const auto hits = field<ordered_json>(j, "hits");
  if (!hits.is_array()) corrupt("field 'hits' is not an array");
  for (const auto& h : hits) {
    const auto witness = field<ordered_json>(h, "witness");
    c.hits.push_back({field<std::uint64_t>(h, "p"), c.kind, field<int>(witness, primary_key(c.kind)),
                      field<int>(witness, recheck_key(c.kind))});
  }
  return c;
}

void save_checkpoint(const std::filesystem::path& path, Checkpoint c) {
  c.updated_at = utc_timestamp();
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << checkpoint_to_json(c);
    out.flush();
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open checkpoint " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return checkpoint_from_json(ss.str());
}

std::filesystem::path default_checkpoint_path(SearchKind kind, std::uint64_t lo, std::uint64_t hi) {
  const std::string name = std::string(to_string(kind)) + "-" + std::to_string(lo) + "-" + std::to_string(hi) + ".json";
  if (const char* dir = std::getenv("WLAB_CHECKPOINT_DIR"); dir && *dir) return std::filesystem::path(dir) / name;
  return name;
}

}  // namespace wlab
