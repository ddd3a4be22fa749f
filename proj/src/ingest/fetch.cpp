#include "dtriage/ingest/fetch.hpp"

#include <httplib.h>

#include "dtriage/core/error.hpp"

namespace dtriage::ingest {

namespace {

struct SplitUrl {
  std::string host_port;  // "host" or "host:port"
  std::string path;
};

SplitUrl split_http_url(const std::string& url) {
  const std::string scheme = "http://";
  if (url.rfind(scheme, 0) != 0) {
    throw Error("MalformedValue", "only http:// URLs are supported, got " + url);
  }
  const auto rest = url.substr(scheme.size());
  const auto slash = rest.find('/');
  if (slash == std::string::npos) return {rest, "/"};
  return {rest.substr(0, slash), rest.substr(slash)};
}

}  // namespace

FetchResult fetch_structured_pages(const std::string& url, std::size_t max_pages) {
  FetchResult result;
  SplitUrl current = split_http_url(url);

  while (result.pages < max_pages) {
    httplib::Client client(("http://" + current.host_port).c_str());
    const auto response = client.Get(current.path.c_str());
    if (!response) {
      throw Error("IoFailure", "request to http://" + current.host_port + current.path +
                                   " failed: " + httplib::to_string(response.error()));
    }
    if (response->status != 200) {
      throw Error("IoFailure", "http://" + current.host_port + current.path + " returned " +
                                   std::to_string(response->status));
    }

    auto document = parse_structured_document(response->body);
    ++result.pages;
    for (auto& record : document.records) result.records.push_back(std::move(record));
    for (auto& diagnostic : document.diagnostics) {
      diagnostic.where = "page " + std::to_string(result.pages) + ": " + diagnostic.where;
      result.diagnostics.push_back(std::move(diagnostic));
    }

    if (!document.next_link) break;
    if (document.next_link->rfind("http://", 0) == 0) {
      current = split_http_url(*document.next_link);
    } else {
      // Relative link: same host, absolute or relative path.
      current.path = document.next_link->front() == '/' ? *document.next_link
                                                        : "/" + *document.next_link;
    }
  }
  return result;
}

}  // namespace dtriage::ingest
