#pragma once

// HTTP GET with an on-disk cache keyed by the SHA-256 of the URL.

#include <filesystem>
#include <functional>
#include <string>

namespace powsec::data {

// Returns the body or throws DataError.
using Transport = std::function<std::string(const std::string& url)>;

std::string curl_get(const std::string& url);

struct FetchOptions {
  bool offline = false;  // never touch the network
  bool force = false;    // re-download even when cached
  Transport transport = curl_get;
};

struct FetchResult {
  std::filesystem::path path;
  bool from_cache = false;
  std::string sha256;  // of the content
};

// Cache layout: <cache_dir>/<sha256(url)> and <sha256(url)>.meta.json with
// url, fetched_at and content sha256.
FetchResult fetch_external(const std::string& url, const std::filesystem::path& cache_dir,
                           const FetchOptions& options = {});

}  // namespace powsec::data
