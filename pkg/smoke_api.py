#!/usr/bin/env python3
"""
Smoke script that exercises every API endpoint against a running server.
Run after starting the server: uvicorn app.main:app --reload
"""
import json
import time

import requests

BASE_URL = "http://localhost:8000"

FIXTURE_A = {
    "budget": 10,
    "deliveries": [
        {"id": 1, "launch": 0, "rendezvous": 2, "cost": 6},
        {"id": 2, "launch": 1, "rendezvous": 3, "cost": 6},
        {"id": 3, "launch": 4, "rendezvous": 5, "cost": 5},
        {"id": 4, "launch": 4, "rendezvous": 6, "cost": 5},
    ],
}


def print_section(title):
    print(f"\n{'='*60}")
    print(f"  {title}")
    print(f"{'='*60}\n")


def check_health():
    print_section("1. Health Check")
    response = requests.get(f"{BASE_URL}/")
    print(f"Status: {response.status_code}")
    print(f"Response: {json.dumps(response.json(), indent=2)}")
    return response.status_code == 200


def check_solvers():
    print_section("2. Solve Fixture A With Every Algorithm")
    drones = {}
    for algorithm in ("greedy", "coloring", "exact"):
        start_time = time.time()
        response = requests.post(f"{BASE_URL}/solve", params={"algorithm": algorithm}, json=FIXTURE_A)
        end_time = time.time()
        if response.status_code != 200:
            print(f"{algorithm}: status {response.status_code} {response.text}")
            return None
        drones[algorithm] = response.json()["drones_used"]
        print(f"{algorithm:>8}: {drones[algorithm]} drones in {end_time - start_time:.3f} seconds")
    return drones


def check_verify():
    print_section("3. Verify the Greedy Solution")
    solution = requests.post(f"{BASE_URL}/solve", json=FIXTURE_A).json()
    response = requests.post(f"{BASE_URL}/verify", json={"instance": FIXTURE_A, "solution": solution})
    print(f"Status: {response.status_code}")
    print(f"Response: {json.dumps(response.json(), indent=2)}")
    return response.status_code == 200 and response.json()["passed"]


def check_graph():
    print_section("4. Interval Graph Statistics")
    response = requests.post(f"{BASE_URL}/graph", json=FIXTURE_A)
    print(f"Status: {response.status_code}")
    print(f"Response: {json.dumps(response.json(), indent=2)}")
    return response.status_code == 200


def check_invalid_instance():
    print_section("5. Invalid Instance Is Rejected With Diagnostics")
    bad = {"budget": 10, "deliveries": [{"id": 1, "launch": 0, "rendezvous": 1, "cost": 11}]}
    response = requests.post(f"{BASE_URL}/solve", json=bad)
    print(f"Status: {response.status_code}")
    print(f"Response: {json.dumps(response.json(), indent=2)}")
    if response.status_code == 422:
        print("\n✓ Correctly rejected cost above budget")
        return True
    return False


def check_bench():
    print_section("6. Bound Certificates on Random Instances")
    body = {"configs": [{"n": 10, "seed": s, "horizon": 100} for s in range(5)]}
    response = requests.post(f"{BASE_URL}/bench", json=body)
    print(f"Status: {response.status_code}")
    for cert in response.json():
        print(
            f"  instance {cert['instance_id']}: greedy={cert['m_greedy']} "
            f"coloring={cert['m_coloring']} OPT={cert['opt']}"
        )
    return response.status_code == 200


def main():
    print("\n" + "="*60)
    print("  DRONE DELIVERY PACKING API - SMOKE RUN")
    print("="*60)

    results = []

    try:
        results.append(("Health Check", check_health()))
        drones = check_solvers()
        results.append(("Solvers", drones == {"greedy": 4, "coloring": 4, "exact": 4}))
        results.append(("Verify", check_verify()))
        results.append(("Graph", check_graph()))
        results.append(("Validation", check_invalid_instance()))
        results.append(("Bench", check_bench()))

        # Summary
        print_section("SUMMARY")
        passed = sum(1 for _, result in results if result)
        total = len(results)

        for name, result in results:
            status = "✓ PASS" if result else "✗ FAIL"
            print(f"{status}: {name}")

        print(f"\n{passed}/{total} checks passed")

    except requests.exceptions.ConnectionError:
        print("\n❌ ERROR: Cannot connect to server")
        print("Make sure the server is running:")
        print("  uvicorn app.main:app --reload")


if __name__ == "__main__":
    main()
