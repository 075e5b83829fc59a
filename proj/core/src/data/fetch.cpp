#include "powsec/data/fetch.hpp"

#include <curl/curl.h>

#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "powsec/error.hpp"
#include "powsec/date.hpp"
#include "powsec/hash.hpp"

namespace powsec::data {
namespace {

std::size_t append(char* data, std::size_t size, std::size_t count, void* user) {
  static_cast<std::string*>(user)->append(data, size * count);
  return size * count;
}

std::string utc_now() {
  const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  const Date d = utc_day(now);
  const auto s = (now - d).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "T%02lld:%02lld:%02lldZ", static_cast<long long>(s / 3600),
                static_cast<long long>(s / 60 % 60), static_cast<long long>(s % 60));
  return format_date(d) + buf;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  const auto tmp = path.string() + ".part";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw DataError("cannot write '" + tmp + "'");
    out << bytes;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::string curl_get(const std::string& url) {
  CURL* curl = curl_easy_init();
  if (curl == nullptr) throw DataError("libcurl initialisation failed");
  std::string body;
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(curl, CURLOPT_TIMEOUT, 60L);
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, append);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
  const CURLcode rc = curl_easy_perform(curl);
  curl_easy_cleanup(curl);
  if (rc != CURLE_OK) throw DataError("fetch '" + url + "' failed: " + curl_easy_strerror(rc));
  return body;
}

FetchResult fetch_external(const std::string& url, const std::filesystem::path& cache_dir,
                           const FetchOptions& options) {
  const std::string key = sha256_hex(url);
  const auto path = cache_dir / key;
  const auto meta = cache_dir / (key + ".meta.json");

  if (!options.force && std::filesystem::exists(path)) {
    return FetchResult{path, true, sha256_file(path)};
  }
  if (options.offline) throw DataError("offline and '" + url + "' is not cached");
  if (!options.transport) throw DataError("no transport configured");

  const std::string body = options.transport(url);
  std::filesystem::create_directories(cache_dir);
  write_file(path, body);
  const std::string digest = sha256_hex(body);
  nlohmann::ordered_json j;
  j["url"] = url;
  j["fetched_at"] = utc_now();
  j["sha256"] = digest;
  write_file(meta, j.dump(2) + "\n");
  return FetchResult{path, false, digest};
}

}  // namespace powsec::data
