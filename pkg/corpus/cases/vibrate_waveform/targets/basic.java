public class Pulse {
    void go(android.os.Vibrator v, long[] pat, int reps) {
        v.vibrate(pat, reps);
    }
}
