#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "i40sh/registry/registry.hpp"

namespace i40sh::registry {

class BindError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// HTTP/1.1 front end for a Registry. Requests run on the server's worker
// threads; the Registry provides the synchronization.
class HttpServer {
 public:
  explicit HttpServer(Registry& registry);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds without SO_REUSEPORT, so a port already in use fails. Port 0
  // picks an ephemeral port. Returns the bound port; throws BindError.
  int bind(const std::string& host, int port);
  // Serves until stop(). Requires a successful bind().
  void listen();
  // Safe from any thread, including a signal-watching one.
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace i40sh::registry
