public class Sensible {
    void go(android.os.Vibrator v, long[] pat, int reps) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            v.vibrate(pat, reps);
        }
        v.vibrate(pat, reps);
    }
}
