#include "i40sh/registry/server.hpp"

#include <sys/socket.h>

#include "httplib.h"

namespace i40sh::registry {

namespace {

// httplib hands handlers a percent-decoded path; put back what cannot
// appear in an IRI so the lookup sees the registered spelling.
std::string reencode_path(const std::string& path) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : path) {
    if (c <= 0x20 || c == 0x7F || std::string_view("<>\"{}|^`\\%").find(static_cast<char>(c)) != std::string_view::npos) {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

}  // namespace

struct HttpServer::Impl {
  explicit Impl(Registry& r) : registry(r) {}

  void dispatch(const httplib::Request& req, httplib::Response& res) {
    HttpRequest request;
    request.method = req.method;
    request.path = reencode_path(req.path);
    for (const auto& [name, value] : req.headers) {
      std::string key = name;
      for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      request.headers.emplace(std::move(key), value);
    }
    request.body = req.body;
    HttpResponse response = registry.handle(request);
    res.status = response.status;
    for (const auto& [name, value] : response.headers) res.set_header(name, value);
    if (!response.content_type.empty()) res.set_content(response.body, response.content_type);
  }

  Registry& registry;
  httplib::Server server;
};

HttpServer::HttpServer(Registry& registry) : impl_(std::make_unique<Impl>(registry)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) { impl_->dispatch(req, res); };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Put(".*", handler);
  impl_->server.Delete(".*", handler);
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw BindError("cannot bind " + host + " to an ephemeral port");
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw BindError("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace i40sh::registry
