/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The headpoint Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <deque>
#include <thread>

#include <boost/asio/dispatch.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include "headpoint/error.hpp"
#include "headpoint/service.hpp"

namespace headpoint {

namespace {

namespace beast = boost::beast;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

// One WebSocket connection. All handlers run on the connection's strand, so
// the protocol handler sees frames strictly in arrival order and replies
// leave in the order they were queued.
class Connection : public std::enable_shared_from_this<Connection> {
 public:
  explicit Connection(tcp::socket&& socket) : ws_(std::move(socket)) {}

  void run() { net::dispatch(ws_.get_executor(), beast::bind_front_handler(&Connection::on_run, shared_from_this())); }

 private:
  void on_run() {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(beast::bind_front_handler(&Connection::on_accept, shared_from_this()));
  }

  void on_accept(beast::error_code ec) {
    if (ec) return;
    do_read();
  }

  void do_read() { ws_.async_read(buffer_, beast::bind_front_handler(&Connection::on_read, shared_from_this())); }

  void on_read(beast::error_code ec, std::size_t) {
    if (ec) return;
    const std::string text = beast::buffers_to_string(buffer_.data());
    buffer_.consume(buffer_.size());
    for (auto& reply : handler_.on_text(text)) enqueue(std::move(reply));
    if (handler_.closing()) {
      closing_ = true;
      if (outbox_.empty()) do_close();
      return;
    }
    do_read();
  }

  void enqueue(std::string message) {
    outbox_.push_back(std::move(message));
    if (outbox_.size() == 1) do_write();
  }

  void do_write() {
    ws_.text(true);
    ws_.async_write(net::buffer(outbox_.front()),
                    beast::bind_front_handler(&Connection::on_write, shared_from_this()));
  }

  void on_write(beast::error_code ec, std::size_t) {
    if (ec) return;
    outbox_.pop_front();
    if (!outbox_.empty()) {
      do_write();
    } else if (closing_) {
      do_close();
    }
  }

  void do_close() {
    ws_.async_close(websocket::close_code::normal, [self = shared_from_this()](beast::error_code) {});
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  ProtocolHandler handler_;
  std::deque<std::string> outbox_;
  bool closing_ = false;
};

class Listener : public std::enable_shared_from_this<Listener> {
 public:
  Listener(net::io_context& ioc, tcp::endpoint endpoint) : ioc_(ioc), acceptor_(net::make_strand(ioc)) {
    beast::error_code ec;
    acceptor_.open(endpoint.protocol(), ec);
    if (!ec) acceptor_.set_option(net::socket_base::reuse_address(true), ec);
    if (!ec) acceptor_.bind(endpoint, ec);
    if (!ec) acceptor_.listen(net::socket_base::max_listen_connections, ec);
    if (ec) throw Error(Errc::io, "cannot listen on " + endpoint.address().to_string() + ":" +
                                      std::to_string(endpoint.port()) + ": " + ec.message());
  }

  void run() { do_accept(); }
  std::uint16_t port() const { return acceptor_.local_endpoint().port(); }

 private:
  void do_accept() {
    acceptor_.async_accept(net::make_strand(ioc_), beast::bind_front_handler(&Listener::on_accept, shared_from_this()));
  }

  void on_accept(beast::error_code ec, tcp::socket socket) {
    if (!ec) std::make_shared<Connection>(std::move(socket))->run();
    if (acceptor_.is_open()) do_accept();
  }

  net::io_context& ioc_;
  tcp::acceptor acceptor_;
};

}  // namespace

struct SessionServer::Impl {
  ServerOptions options;
  net::io_context ioc;
  std::shared_ptr<Listener> listener;
  std::vector<std::thread> workers;
  std::uint16_t port = 0;
};

SessionServer::SessionServer(ServerOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
}

SessionServer::~SessionServer() { stop(); }

void SessionServer::start() {
  if (impl_->listener) return;
  beast::error_code ec;
  const auto address = net::ip::make_address(impl_->options.host, ec);
  if (ec) throw Error(Errc::invalid_argument, "bad listen address '" + impl_->options.host + "'");
  impl_->listener = std::make_shared<Listener>(impl_->ioc, tcp::endpoint{address, impl_->options.port});
  impl_->port = impl_->listener->port();
  impl_->listener->run();
  const int n = std::max(1, impl_->options.threads);
  for (int i = 0; i < n; ++i) impl_->workers.emplace_back([this] { impl_->ioc.run(); });
}

void SessionServer::stop() {
  if (!impl_ || impl_->workers.empty()) return;
  impl_->ioc.stop();
  for (auto& t : impl_->workers) t.join();
  impl_->workers.clear();
}

std::uint16_t SessionServer::port() const { return impl_->port; }

}  // namespace headpoint
