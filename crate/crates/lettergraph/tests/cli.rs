use std::io::Write;

use lettergraph::cli::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lettergraph").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn decode() {
    assert_eq!(
        invoke(&["decode", "--word", "2,1,3,2", "--decoder", "2:1,3:2"]),
        (0, "4 2\n1 2\n3 4\n".into(), String::new())
    );
    assert_eq!(
        invoke(&["decode", "--word", "1,1", "--decoder", ""]).1,
        "2 0\n"
    );
    let (code, _, err) = invoke(&["decode", "--word", "1,2", "--decoder", "9:9"]);
    assert_eq!(code, 1);
    assert!(err.contains("alphabet"));
    assert_eq!(
        invoke(&["decode", "--word", "1,2", "--decoder", "9:9", "--k", "9"]),
        (0, "2 0\n".into(), String::new())
    );
    assert_eq!(
        invoke(&["decode", "--word", "2132", "--decoder", "2:1,3:2"]).1,
        "4 2\n1 2\n3 4\n"
    );
    assert_eq!(
        invoke(&[
            "decode",
            "--word",
            "2,1",
            "--decoder",
            "2:1",
            "--format",
            "dot"
        ])
        .1,
        "graph {\n  1;\n  2;\n  1 -- 2;\n}\n"
    );
    assert_eq!(invoke(&["decode", "--word", "1,x", "--decoder", ""]).0, 1);
}

#[test]
fn path() {
    let (code, out, _) = invoke(&["path", "7", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "k 3\nw 2,1,3,2,1,3,2\nD 2:1,3:2\nalphabet 3\nVERIFIED P_7\n"
    );
    let (code, out, _) = invoke(&["path", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("alphabet 2"));
    let (code, _, err) = invoke(&["path", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("n >= 3"));
}

#[test]
fn path_verify_up_to_two_hundred() {
    for n in 3..=200 {
        let (code, out, _) = invoke(&["path", &n.to_string(), "--verify"]);
        assert_eq!(code, 0, "n = {n}");
        assert!(out.ends_with(&format!("VERIFIED P_{n}\n")));
    }
}

#[test]
fn lettericity() {
    let (code, out, _) = invoke(&["lettericity", "--path", "7"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("lettericity 3\n"));
    assert!(out.contains("\nmap "));
    assert!(invoke(&["lettericity", "--matching", "3"])
        .1
        .starts_with("lettericity 3\n"));
    assert_eq!(
        invoke(&["lettericity", "--path", "2"]).1,
        "lettericity 1\nk 1\nw 1,1\nD 1:1\nmap 1:1,2:2\n"
    );
    let (code, _, err) = invoke(&["lettericity", "--path", "13"]);
    assert_eq!(code, 2);
    assert!(err.contains("12"));
    // exactly one target
    assert_eq!(invoke(&["lettericity"]).0, 1);
    assert_eq!(
        invoke(&["lettericity", "--path", "3", "--matching", "2"]).0,
        1
    );
}

#[test]
fn graph_files() {
    let dir = std::env::temp_dir().join(format!("lettergraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph = dir.join("p4.txt");
    std::fs::File::create(&graph)
        .unwrap()
        .write_all(b"4 3\n1 2\n2 3\n3 4\n")
        .unwrap();
    let g = graph.to_str().unwrap();
    assert!(invoke(&["lettericity", g]).1.starts_with("lettericity 2\n"));
    assert_eq!(
        invoke(&["export", g]).1,
        "graph {\n  1;\n  2;\n  3;\n  4;\n  1 -- 2;\n  2 -- 3;\n  3 -- 4;\n}\n"
    );
    assert_eq!(
        invoke(&["export", g, "--format", "edges"]).1,
        "4 3\n1 2\n2 3\n3 4\n"
    );

    let lettering = dir.join("l.txt");
    std::fs::write(&lettering, "k 2\nw 2,1,2,1\nD 2:1\n").unwrap();
    let l = lettering.to_str().unwrap();
    assert_eq!(
        invoke(&["verify", l, g]),
        (0, "VERIFIED\n".into(), String::new())
    );
    std::fs::write(&lettering, "k 2\nw 1,1,2,2\nD 1:1,2:2\n").unwrap();
    assert_eq!(invoke(&["verify", l, g]).1, "MISMATCH\n");
    assert_eq!(invoke(&["verify", l, g]).0, 1);

    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "2 1\n1 3\n").unwrap();
    let (code, _, err) = invoke(&["lettericity", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"));
    assert_eq!(invoke(&["lettericity", "/nonexistent/graph"]).0, 1);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn enumerate() {
    let (code, out, _) = invoke(&["enumerate", "--matching", "2", "--k", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[..2], ["witnesses 3", "truncated false"]);
    assert!(lines[2].starts_with("w=1,1,2,2 D=1:1,2:2 map="));
    let out = invoke(&["enumerate", "--matching", "3", "--k", "3", "--limit", "2"]).1;
    assert!(out.starts_with("witnesses 2\ntruncated true\n"));
}

#[test]
fn lemma_reports() {
    assert_eq!(invoke(&["count", "1"]), (0, "1\n".into(), String::new()));
    assert_eq!(invoke(&["count", "2"]).1, "6\n");
    assert_eq!(invoke(&["count", "3"]).1, "90\n");
    assert_eq!(
        invoke(&["count", "2", "--conventions"]).1,
        "fixed-alphabet 6\ncanonical 3\n"
    );
    assert_eq!(
        invoke(&["audit", "2", "2"]),
        (
            0,
            "max-letter-occurrences 2; lemma3 1.0\n".into(),
            String::new()
        )
    );
    assert_eq!(
        invoke(&["audit", "3", "5", "--format", "kv"]).1,
        "r=3\nk=5\nwitnesses=".to_owned()
            + &invoke(&["enumerate", "--matching", "3", "--k", "5"])
                .1
                .lines()
                .next()
                .unwrap()[10..]
            + "\nmax-letter-occurrences=2\nlemma2=true\nlemma3=n/a\npassed=true\n"
    );
    assert_eq!(invoke(&["count", "4"]).0, 2);
    assert_eq!(invoke(&["audit", "4", "4"]).0, 2);
}

#[test]
fn deterministic() {
    for args in [
        &["lettericity", "--path", "9"][..],
        &["enumerate", "--path", "5", "--k", "3"],
        &["audit", "3", "3", "--format", "kv"],
    ] {
        assert_eq!(invoke(args), invoke(args));
    }
}

#[test]
fn help_and_usage() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("lettericity"));
    assert_eq!(invoke(&["frobnicate"]).0, 1);
}
