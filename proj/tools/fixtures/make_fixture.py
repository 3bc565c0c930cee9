#!/usr/bin/env python3
# Copyright 2026 The efparse Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates tests/fixtures/{corpus.log,ground_truth.csv,mock.rules}.

The corpus mixes ordinary templates (answered correctly by the mock) with
scripted situations: a length-mismatched merge, a partial merge, and the
three template faults (format, over-specific, over-general).
"""
import csv
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parents[2] / "tests" / "fixtures"
rng = random.Random(20260418)


def ip():
    return ".".join(str(rng.randint(10, 250)) for _ in range(4))


def ident(prefix, lo=100, hi=9999):
    return f"{prefix}{rng.randint(lo, hi)}"


def blk():
    return f"blk_{rng.choice(['', '-'])}{rng.randint(10**17, 10**18)}"


DAYS = ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"]
MONTHS = ["Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"]


def stamp(day):
    return (f"{day} {rng.choice(MONTHS)} {rng.randint(1, 28)} "
            f"{rng.randint(0, 23):02d}:{rng.randint(0, 59):02d}:{rng.randint(0, 59):02d} 2005")


# (ground-truth template, mock extract matcher, mock response, log generator)
ORDINARY = [
    ("Receiving block blk_<*> src: <*> dest: <*>", "Receiving block",
     "Receiving block blk_<*> src: <*> dest: <*>",
     lambda: f"Receiving block {blk()} src: /{ip()}:{rng.randint(1024, 65000)} dest: /{ip()}:50010"),
    ("PacketResponder <*> for block blk_<*> terminating", "PacketResponder",
     "PacketResponder <*> for block blk_<*> terminating",
     lambda: f"PacketResponder {rng.randint(0, 2)} for block {blk()} terminating"),
    ("session opened for user <*> by (uid=<*>)", "session opened",
     "session opened for user <*> by (uid=<*>)",
     lambda: f"session opened for user {ident('svc_')} by (uid={rng.randint(0, 999)})"),
    ("Accepted password for <*> from <*> port <*> ssh2", "Accepted password",
     "Accepted password for <*> from <*> port <*> ssh2",
     lambda: f"Accepted password for {ident('u')} from {ip()} port {rng.randint(1024, 65000)} ssh2"),
    ("GET <*> HTTP/1.1 <*> <*>", "GET /",
     "GET <*> HTTP/1.1 <*> <*>",
     lambda: f"GET /{rng.choice(['static', 'api', 'img'])}/{ident('r')}.html HTTP/1.1 "
             f"{rng.choice([200, 304, 404])} {rng.randint(100, 90000)}"),
    ("Starting service <*> on port <*>", "Starting service",
     "Starting service <*> on port <*>",
     lambda: f"Starting service {ident('svc-')} on port {rng.randint(1024, 65000)}"),
    ("Disk usage on <*> at <*>%", "Disk usage",
     "Disk usage on <*> at <*>%",
     lambda: f"Disk usage on /dev/sd{rng.choice('abc')}{rng.randint(1, 4)} at {rng.randint(10, 99)}%"),
    ("Worker <*> heartbeat latency <*> ms", "heartbeat latency",
     "Worker <*> heartbeat latency <*> ms",
     lambda: f"Worker {ident('w', 10, 99)} heartbeat latency {rng.randint(1, 900)} ms"),
    ("Cache eviction removed <*> entries in <*> ms", "Cache eviction",
     "Cache eviction removed <*> entries in <*> ms",
     lambda: f"Cache eviction removed {rng.randint(1, 5000)} entries in {rng.randint(1, 90)} ms"),
    ("Out of memory: Kill process <*> score <*> or sacrifice child", "Out of memory",
     "Out of memory: Kill process <*> score <*> or sacrifice child",
     lambda: f"Out of memory: Kill process {rng.randint(300, 30000)} score {rng.randint(1, 999)} "
             f"or sacrifice child"),
    ("Config reloaded from <*> with <*> keys", "Config reloaded",
     "Config reloaded from <*> with <*> keys",
     lambda: f"Config reloaded from /etc/app/{ident('conf', 1, 9)}.yaml with {rng.randint(5, 400)} keys"),
    ("Heartbeat lost from node <*> after <*> seconds", "Heartbeat lost",
     "Heartbeat lost from node <*> after <*> seconds",
     lambda: f"Heartbeat lost from node {ident('n', 10, 99)} after {rng.randint(2, 120)} seconds"),
]

CONNECTION = "connection from <*> at <*>"
DB_FAILED = "ERROR: Database connection failed - Host: <*> retry <*>"
DB_REFUSED = "ERROR: Database connection refused - Host: <*> retry <*>"
LOGIN = "User <*> logged in from IP <*>"
PROCESS = "Process <*> terminated with exit code <*>"
REPL_DONE = "Replication task <*> for volume <*> has completed"
REPL_ABORT = "Replication task <*> for volume <*> has aborted"
DB_PLAIN = "Database connection failed"


def main():
    lines = []  # (content, truth)

    ordinary = []
    for truth, _, _, gen in ORDINARY:
        for _ in range(11):
            ordinary.append((gen(), truth))
    rng.shuffle(ordinary)

    def take(n):
        for _ in range(n):
            if ordinary:
                lines.append(ordinary.pop())

    # Length-mismatched merge: the first answer keeps "Mon" as a constant.
    lines.append((f"connection from {ip()} at {stamp('Mon')}", CONNECTION))
    take(6)
    lines.append((f"connection from {ip()} at {stamp('Tue')}", CONNECTION))
    take(6)

    # Partial merge: the host is kept as a constant in both answers.
    for k in range(1, 4):
        lines.append((f"ERROR: Database connection failed - Host: db-primary retry {k}", DB_FAILED))
    take(8)
    lines.append(("ERROR: Database connection refused - Host: db-cache retry 1", DB_REFUSED))
    take(4)
    lines.append(("ERROR: Database connection failed - Host: db-cache retry 2", DB_FAILED))
    lines.append(("ERROR: Database connection refused - Host: db-primary retry 3", DB_REFUSED))

    # Format fault.
    lines.append((f"User {ident('u')} logged in from IP {ip()}", LOGIN))
    take(5)
    # Over-specific fault.
    lines.append((f"Process apache2 terminated with exit code {rng.randint(0, 3)}", PROCESS))
    take(5)
    # Over-general faults, one with demonstrations and one without.
    lines.append(("Replication task 12 for volume vol7 has completed", REPL_DONE))
    lines.append(("Replication task 12 for volume vol7 has aborted", REPL_ABORT))
    take(5)
    lines.append((DB_PLAIN, DB_PLAIN))
    take(5)

    tail = []
    for _ in range(3):
        tail.append((f"connection from {ip()} at {stamp(rng.choice(DAYS))}", CONNECTION))
    for _ in range(4):
        host = rng.choice(["db-primary", "db-cache", "db-replica"])
        verb, truth = rng.choice([("failed", DB_FAILED), ("refused", DB_REFUSED)])
        tail.append((f"ERROR: Database connection {verb} - Host: {host} retry {rng.randint(1, 9)}", truth))
    for _ in range(5):
        tail.append((f"User {ident('u')} logged in from IP {ip()}", LOGIN))
        tail.append((f"Process {rng.choice(['nginx', 'sshd', 'cron'])}{rng.randint(1, 9)} terminated with exit code "
                     f"{rng.randint(0, 3)}", PROCESS))
    for _ in range(3):
        a, b = rng.randint(13, 99), ident("vol", 1, 9)
        tail.append((f"Replication task {a} for volume {b} has completed", REPL_DONE))
        tail.append((f"Replication task {a} for volume {b} has aborted", REPL_ABORT))
        tail.append((DB_PLAIN, DB_PLAIN))
    tail.extend(ordinary)
    rng.shuffle(tail)
    lines.extend(tail)

    # Every line again at the end exercises the cache on repeats.
    lines.extend(lines[:20])

    OUT.mkdir(parents=True, exist_ok=True)
    with open(OUT / "corpus.log", "w", newline="\n") as f:
        for content, _ in lines:
            f.write(content + "\n")
    with open(OUT / "ground_truth.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\r\n")
        w.writerow(["LineId", "Content", "EventTemplate"])
        for i, (content, truth) in enumerate(lines, 1):
            w.writerow([i, content, truth])

    rules = [
        "# Mock answers for the fixture corpus: kind | matcher | response",
        "extract | at Mon | connection from <*> at Mon <*>",
        "extract | connection from | " + CONNECTION,
        "extract | Database connection failed - Host: db-primary | ERROR: Database connection failed - Host: db-primary retry <*>",
        "extract | Database connection refused - Host: db-cache | ERROR: Database connection refused - Host: db-cache retry <*>",
        "extract | Database connection failed - Host: | " + DB_FAILED,
        "extract | Database connection refused - Host: | " + DB_REFUSED,
        "extract | logged in from IP | User <*> logged in, from IP <*>",
        "extract | Process apache2 | Process apache2 terminated with exit code <*>",
        "extract | terminated with exit code | " + PROCESS,
        "extract | has completed | " + REPL_DONE,
        "extract | has aborted | Replication task <*> for volume <*> has <*>",
        "extract | Database connection failed | Database connection <*>",
    ]
    for truth, matcher, response, _ in ORDINARY:
        rules.append(f"extract | {matcher} | {response}")
    rules += [
        "extract | * | {log}",
        "merge | left: Mon <*> | <*>",
        "merge | * | {left}",
        "confirm | suspects: apache2 | apache2",
        "confirm | * | ",
    ]
    with open(OUT / "mock.rules", "w", newline="\n") as f:
        f.write("\n".join(rules) + "\n")
    print(f"{len(lines)} lines, {len(set(t for _, t in lines))} templates")


if __name__ == "__main__":
    main()
