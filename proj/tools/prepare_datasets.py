#!/usr/bin/env python3
# Copyright 2026 The fairmine Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds the categorical German Credit and Adult CSVs under data/.

The raw UCI files are read from the `responsibly` wheel, which bundles them:

    pip download responsibly==0.1.2 --no-deps -d /tmp/pkgs
    python3 tools/prepare_datasets.py /tmp/pkgs/responsibly-0.1.2-py3-none-any.whl data
"""

import csv
import sys
import zipfile
from pathlib import Path

GERMAN_CODES = {
    "Checking": {"A11": "lt0", "A12": "0to200", "A13": "ge200", "A14": "none"},
    "CreditHistory": {"A30": "no-credits", "A31": "all-paid-here", "A32": "paid-till-now",
                      "A33": "past-delay", "A34": "critical"},
    "Purpose": {"A40": "car-new", "A41": "car-used", "A42": "furniture", "A43": "radio-tv",
                "A44": "appliances", "A45": "repairs", "A46": "education", "A47": "vacation",
                "A48": "retraining", "A49": "business", "A410": "others"},
    "Savings": {"A61": "lt100", "A62": "100to500", "A63": "500to1000", "A64": "ge1000",
                "A65": "unknown"},
    "Employment": {"A71": "unemployed", "A72": "lt1", "A73": "1to4", "A74": "4to7",
                   "A75": "ge7"},
    "PersonalStatus": {"A91": "male-divorced", "A92": "female-not-single",
                       "A93": "male-single", "A94": "male-married", "A95": "female-single"},
    "OtherDebtors": {"A101": "none", "A102": "co-applicant", "A103": "guarantor"},
    "Property": {"A121": "real-estate", "A122": "savings-insurance", "A123": "car-other",
                 "A124": "none"},
    "InstallmentPlans": {"A141": "bank", "A142": "stores", "A143": "none"},
    "Housing": {"A151": "rent", "A152": "own", "A153": "free"},
    "Job": {"A171": "unskilled-nonres", "A172": "unskilled-res", "A173": "skilled",
            "A174": "highly-skilled"},
    "Telephone": {"A191": "no", "A192": "yes"},
    "ForeignWorker": {"A201": "yes", "A202": "no"},
}

GERMAN_COLUMNS = ["Checking", "Duration", "CreditHistory", "Purpose", "Amount", "Savings",
                  "Employment", "InstallmentRate", "PersonalStatus", "OtherDebtors",
                  "Residence", "Property", "Age", "InstallmentPlans", "Housing",
                  "ExistingCredits", "Job", "Liable", "Telephone", "ForeignWorker", "Credit"]


def bucket(value, cuts, labels):
    for cut, label in zip(cuts, labels):
        if value <= cut:
            return label
    return labels[-1]


def german_row(fields):
    row = {}
    for name, raw in zip(GERMAN_COLUMNS, fields):
        if name in GERMAN_CODES:
            row[name] = GERMAN_CODES[name][raw]
        else:
            row[name] = raw
    row["Duration"] = bucket(int(row["Duration"]), [12, 24], ["le12", "13to24", "gt24"])
    row["Amount"] = bucket(int(row["Amount"]), [1000, 2000, 3000, 4000, 6000, 10000],
                           ["le1000", "1001to2000", "2001to3000", "3001to4000", "4001to6000",
                            "6001to10000", "gt10000"])
    # Old means strictly above 50; younger ages keep coarse bands.
    row["Age"] = bucket(int(row["Age"]), [25, 35, 45, 50],
                        ["le25", "26to35", "36to45", "46to50", "old"])
    row["Credit"] = "good" if row["Credit"] == "1" else "bad"
    return row


def write_german(raw_text, out_dir):
    rows = [german_row(line.split()) for line in raw_text.splitlines() if line.strip()]
    with open(out_dir / "german_credit.csv", "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=GERMAN_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return len(rows)


ADULT_COLUMNS = ["age", "workclass", "fnlwgt", "education", "education-num", "marital-status",
                 "occupation", "relationship", "race", "sex", "capital-gain", "capital-loss",
                 "hours-per-week", "native-country", "income"]
ADULT_KEEP = ["Age", "Workclass", "Education", "MaritalStatus", "Occupation", "Relationship",
              "Race", "Sex", "Hours", "NativeCountry", "Income"]


def adult_row(fields):
    f = dict(zip(ADULT_COLUMNS, (x.strip() for x in fields)))
    age = f["age"]
    hours = f["hours-per-week"]
    return {
        "Age": "?" if age == "?" else ("young" if int(age) <= 30 else "old"),
        "Workclass": f["workclass"],
        "Education": f["education"],
        "MaritalStatus": f["marital-status"],
        "Occupation": f["occupation"],
        "Relationship": f["relationship"],
        "Race": f["race"],
        "Sex": f["sex"],
        "Hours": "?" if hours == "?" else bucket(int(hours), [39, 40], ["lt40", "40", "gt40"]),
        "NativeCountry": f["native-country"],
        "Income": f["income"].rstrip("."),
    }


def write_adult(raw_text, path):
    rows = []
    for line in raw_text.splitlines():
        if not line.strip() or line.startswith("|"):
            continue
        rows.append(adult_row(line.split(",")))
    with open(path, "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=ADULT_KEEP, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return len(rows)


def main(argv):
    if len(argv) != 3:
        print(__doc__)
        return 64
    wheel, out_dir = argv[1], Path(argv[2])
    out_dir.mkdir(parents=True, exist_ok=True)
    with zipfile.ZipFile(wheel) as z:
        base = "responsibly/dataset/"
        n = write_german(z.read(base + "german/german.data").decode(), out_dir)
        print(f"german_credit.csv: {n} rows")
        n = write_adult(z.read(base + "adult/adult.data").decode(), out_dir / "adult_train.csv")
        print(f"adult_train.csv: {n} rows")
        n = write_adult(z.read(base + "adult/adult.test").decode(), out_dir / "adult_test.csv")
        print(f"adult_test.csv: {n} rows")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
