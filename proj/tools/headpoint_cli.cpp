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

// Command-line front end. Talks to the engine exclusively through the C API.

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "headpoint/headpoint.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

int report(hp_status status) {
  if (status == HP_OK) return 0;
  std::cerr << "headpoint: " << hp_last_error() << " (" << hp_status_name(status) << ")\n";
  return status == HP_ERR_INVALID_ARGUMENT ? kExitUsage : kExitData;
}

struct Screen {
  std::string profile;

  hp_status resolve(hp_screen* out) const {
    return profile.empty() ? hp_screen_default(out) : hp_screen_parse(profile.c_str(), out);
  }
};

int run_synth(const hp_synth_options& base, const std::string& layout, const std::string& distance,
              const std::string& select, const Screen& screen, const std::string& out_dir) {
  hp_synth_options options = base;
  options.layout = layout.c_str();
  options.distance = distance.c_str();
  options.select = select.c_str();
  if (hp_status s = screen.resolve(&options.screen); s != HP_OK) return report(s);
  size_t written = 0;
  if (hp_status s = hp_synth_study(&options, out_dir.c_str(), &written); s != HP_OK) return report(s);
  std::cout << "wrote " << written << " traces to " << out_dir << "\n";
  return 0;
}

int run_replay(const std::string& trace, const std::string& out) {
  size_t written = 0;
  if (hp_status s = hp_replay(trace.c_str(), out.c_str(), &written); s != HP_OK) return report(s);
  std::cout << "wrote " << written << " event log" << (written == 1 ? "" : "s") << " to " << out << "\n";
  return 0;
}

int run_analyze(const std::string& events, const std::string& out, bool pooled) {
  char* summary = nullptr;
  if (hp_status s = hp_analyze(events.c_str(), out.c_str(), pooled ? 1 : 0, &summary); s != HP_OK) return report(s);
  std::cout << summary << "\n";
  hp_string_free(summary);
  return 0;
}

int run_layout(const std::string& name, const Screen& screen, const std::string& out) {
  hp_screen geometry{};
  if (hp_status s = screen.resolve(&geometry); s != HP_OK) return report(s);
  char* doc = nullptr;
  if (hp_status s = hp_layout_document(name.c_str(), &geometry, &doc); s != HP_OK) return report(s);
  if (out.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(out, std::ios::binary);
    f << doc;
    if (!f) {
      hp_string_free(doc);
      std::cerr << "headpoint: cannot write " << out << "\n";
      return kExitData;
    }
  }
  hp_string_free(doc);
  return 0;
}

int run_serve(const std::string& listen) {
  const auto colon = listen.rfind(':');
  if (colon == std::string::npos) {
    std::cerr << "headpoint: --listen expects HOST:PORT\n";
    return kExitUsage;
  }
  const std::string host = listen.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(listen.substr(colon + 1));
  } catch (const std::exception&) {
    port = -1;
  }
  if (port < 0 || port > 65535) {
    std::cerr << "headpoint: bad port in '" << listen << "'\n";
    return kExitUsage;
  }

  // Block the signals before the worker threads exist so only sigwait sees them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  hp_server* server = nullptr;
  if (hp_status s = hp_server_start(host.c_str(), static_cast<uint16_t>(port), &server); s != HP_OK) {
    return report(s);
  }
  std::cout << "listening on ws://" << host << ":" << hp_server_port(server) << std::endl;
  int sig = 0;
  sigwait(&signals, &sig);
  hp_server_stop(server);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"headpoint: head-pose pointing engine, synthetic studies and Fitts analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hp_version());

  hp_synth_options synth{};
  hp_synth_options_default(&synth);
  std::string synth_layout = "all";
  std::string synth_distance = "all";
  std::string synth_select = "glance";
  std::string synth_out;
  Screen synth_screen;
  auto* synth_cmd = app.add_subcommand("synth", "generate synthetic study traces");
  synth_cmd->add_option("--participants", synth.participants, "number of participants")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--seed", synth.seed, "random seed");
  synth_cmd->add_option("--layout", synth_layout, "numbers, alphabets or all")
      ->check(CLI::IsMember({"numbers", "alphabets", "all"}));
  synth_cmd->add_option("--distance", synth_distance, "near, mid, far or all")
      ->check(CLI::IsMember({"near", "mid", "far", "all"}));
  synth_cmd->add_option("--noise-sigma", synth.noise_sigma_pt, "hold noise standard deviation (pt)");
  synth_cmd->add_option("--move-ms-per-pt", synth.move_ms_per_pt, "movement duration per point of amplitude");
  synth_cmd->add_option("--hold-ms", synth.dwell_hold_ms, "hold duration on each target (ms)");
  synth_cmd->add_option("--frame-ms", synth.frame_interval_ms, "frame interval (ms)");
  synth_cmd->add_option("--glance-ms", synth.glance_ms, "glance dwell threshold (ms)");
  synth_cmd->add_option("--gaze-ms", synth.gaze_ms, "gaze dwell threshold (ms), 0 disables");
  synth_cmd->add_option("--select", synth_select, "dwell event that selects")->check(CLI::IsMember({"glance", "gaze"}));
  synth_cmd->add_option("--screen", synth_screen.profile, "screen profile WIDTHxHEIGHT[@METERS]");
  synth_cmd->add_option("--out", synth_out, "output directory")->required();

  std::string replay_trace;
  std::string replay_out;
  auto* replay_cmd = app.add_subcommand("replay", "replay traces into event logs");
  replay_cmd->add_option("--trace", replay_trace, "trace file or directory of traces")->required();
  replay_cmd->add_option("--out", replay_out, "event log file (or directory)")->required();

  std::string analyze_events;
  std::string analyze_out;
  bool analyze_pooled = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Fitts analysis of event logs into CSV tables");
  analyze_cmd->add_option("--events", analyze_events, "directory of event logs")->required();
  analyze_cmd->add_option("--out", analyze_out, "CSV output directory")->required();
  analyze_cmd->add_flag("--pooled", analyze_pooled, "pool participants per distance and layout");

  std::string listen = "127.0.0.1:8765";
  auto* serve_cmd = app.add_subcommand("serve", "run the WebSocket session service");
  serve_cmd->add_option("--listen", listen, "HOST:PORT");

  std::string layout_name;
  std::string layout_out;
  Screen layout_screen;
  auto* layout_cmd = app.add_subcommand("layout", "dump a test layout as JSON");
  layout_cmd->add_option("--name", layout_name, "numbers or alphabets")
      ->required()
      ->check(CLI::IsMember({"numbers", "alphabets"}));
  layout_cmd->add_option("--screen", layout_screen.profile, "screen profile WIDTHxHEIGHT[@METERS]");
  layout_cmd->add_option("--out", layout_out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*synth_cmd) return run_synth(synth, synth_layout, synth_distance, synth_select, synth_screen, synth_out);
  if (*replay_cmd) return run_replay(replay_trace, replay_out);
  if (*analyze_cmd) return run_analyze(analyze_events, analyze_out, analyze_pooled);
  if (*serve_cmd) return run_serve(listen);
  if (*layout_cmd) return run_layout(layout_name, layout_screen, layout_out);
  return kExitUsage;
}
