#include "mthv_cli/cache.hpp"

#include <unistd.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mthv/expr.hpp"

namespace mthv::cli {

namespace {

// Canonical fractions only contain digits, '-' and '/'.
std::string file_token(const std::string& s) {
  std::string out;
  for (char ch : s) out += ch == '/' ? 'o' : ch == '-' ? 'm' : ch;
  return out;
}

}  // namespace

SingularCache::SingularCache(std::filesystem::path dir, const Params& params, bool recheck, std::ostream& warn)
    : dir_(std::move(dir)), params_(params), recheck_(recheck), warn_(warn) {}

std::filesystem::path SingularCache::entry_path(HalfInt level) const {
  return dir_ / ("sv" + std::to_string(kFormatVersion) + "_c" + file_token(params_.c.get_str()) + "_h" +
                 file_token(params_.h.get_str()) + "_l" + file_token(params_.l.get_str()) + "_lv" +
                 file_token(level.to_string()) + ".json");
}

std::optional<std::vector<UEAElement>> SingularCache::read(HalfInt level, std::string* problem) const {
  std::ifstream in(entry_path(level));
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("format").get<int>() != kFormatVersion) throw std::runtime_error("format version mismatch");
    if (j.at("c").get<std::string>() != params_.c.get_str() || j.at("h").get<std::string>() != params_.h.get_str() ||
        j.at("l").get<std::string>() != params_.l.get_str() || j.at("level").get<std::string>() != level.to_string())
      throw std::runtime_error("key mismatch");
    std::vector<UEAElement> out;
    for (const auto& s : j.at("generators")) {
      UEAElement q = parse_element(s.get<std::string>());
      if (q.is_zero() || !q.is_negative() || !q.is_homogeneous() || -q.homogeneous_degree() != level)
        throw std::runtime_error("generator at the wrong level");
      out.push_back(std::move(q));
    }
    return out;
  } catch (const std::exception& e) {
    *problem = e.what();
    return std::nullopt;
  }
}

std::optional<std::vector<UEAElement>> SingularCache::lookup(HalfInt level) {
  std::string problem;
  auto found = read(level, &problem);
  if (found && recheck_) {
    std::vector<UEAElement> before = so_far_;
    for (const auto& q : *found) {
      if (!is_singular_modulo(params_, q, before)) {
        problem = "cached vector failed the singularity recheck";
        found.reset();
        break;
      }
      before.push_back(q);
    }
  }
  if (!problem.empty()) {
    ++rejected_;
    warn_ << "warning: ignoring cache entry " << entry_path(level).string() << ": " << problem << "\n";
    return std::nullopt;
  }
  if (!found) return std::nullopt;
  ++hits_;
  so_far_.insert(so_far_.end(), found->begin(), found->end());
  return found;
}

void SingularCache::store(HalfInt level, const std::vector<UEAElement>& generators) {
  so_far_.insert(so_far_.end(), generators.begin(), generators.end());
  nlohmann::json j;
  j["format"] = kFormatVersion;
  j["c"] = params_.c.get_str();
  j["h"] = params_.h.get_str();
  j["l"] = params_.l.get_str();
  j["level"] = level.to_string();
  j["generators"] = nlohmann::json::array();
  for (const auto& q : generators) j["generators"].push_back(format_element(q));
  try {
    std::filesystem::create_directories(dir_);
    const auto path = entry_path(level);
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << j.dump(2) << "\n";
      if (!out.flush()) throw std::runtime_error("write failed");
    }
    std::filesystem::rename(tmp, path);
    ++stored_;
  } catch (const std::exception& e) {
    warn_ << "warning: could not write cache entry: " << e.what() << "\n";
  }
}

void SingularCache::attach(SearchOptions& options) {
  options.lookup = [this](HalfInt level) { return lookup(level); };
  options.store = [this](HalfInt level, const std::vector<UEAElement>& qs) { store(level, qs); };
}

}  // namespace mthv::cli
